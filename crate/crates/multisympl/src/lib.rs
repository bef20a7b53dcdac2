//! Phase-space charts for first-order field theory.
//!
//! A configuration bundle with an n-dimensional base and a k-dimensional
//! fiber gets a phase space whose extra coordinates are the components of an
//! n-form: one momentum per strictly increasing n-multi-index over the n+k
//! point coordinates, for a total dimension of n + k + (n+k)!/(n!k!).  The
//! chart carries the canonical n-form θ (each momentum times the basis form
//! it multiplies) and the closed (n+1)-form Ω = dθ.
//!
//! Momentum coordinates use the customary aliases rather than raw
//! multi-indices: `e` multiplies the base volume form ω = dx¹∧…∧dxⁿ,
//! `p{μ}_{i}` multiplies dy^i∧(∂_μ⌟ω), `p{μν}_{ij}` multiplies
//! dy^i∧dy^j∧(∂_μ∧∂_ν⌟ω), and the top coordinate of the n = k = 2 chart is
//! `r`.  All signs in θ follow from that convention; none are assigned by
//! hand.
//!
//! [`MultisymplecticSpace::restrict`] cuts a chart down by killing momentum
//! coordinates or identifying them up to sign, rebuilding θ and Ω by
//! substitution.  [`MultisymplecticSpace::ddw`] keeps only `e` and the
//! single-fiber-index momenta; [`MultisymplecticSpace::maxwell4d`] further
//! antisymmetrizes the momenta of a 1-form field on a 4-dimensional base.
//!
//! [`form_kernel`] decides nondegeneracy: the kernel of ξ ↦ ξ⌟Ω is computed
//! symbolically at a generic point, with seeded rational sampling when the
//! coefficients depend on the coordinates.

mod nondeg;
mod space;

pub use nondeg::{form_kernel, Nondegeneracy};
pub use space::{Constraint, MomentumLabel, MultisymplecticSpace, SpaceError, MAX_DIM};
