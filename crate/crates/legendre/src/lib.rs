//! The Legendre correspondence for first-order field theories.
//!
//! A Lagrangian density L(x, y, v) in base coordinates, fiber coordinates,
//! and first derivatives lifts each velocity table to the decomposable
//! n-vector z(v) = (∂₁ + v^i_1 ∂_{y^i}) ∧ ⋯ ∧ (∂_n + v^i_n ∂_{y^i}).
//! Against a momentum chart carrying the canonical n-form θ this produces
//! the W-function
//!
//! ```text
//! W(q, v, p) = ⟨z(v), θ(p)⟩ − L(q, v),
//! ```
//!
//! bilinear in the momenta and polynomial in the velocities. Everything in
//! this crate is a view of the critical set ∂W/∂v = 0:
//!
//! * solved for the momenta at fixed velocity it is the enlarged
//!   pseudofiber, an affine subspace whose direction space annihilates the
//!   tangent of the decomposable cone ([`enlarged_pseudofiber`],
//!   [`pseudofiber_level`]);
//! * solved for the velocities at fixed momentum it eliminates v from W
//!   and yields the Hamiltonian together with both correspondence maps
//!   ([`hamiltonian`], [`LegendreResult`]);
//! * differentiated in the momenta after elimination it gives back the
//!   components of the lift, which [`verify_duality`] checks exactly.
//!
//! Symbolic elimination covers Lagrangians quadratic in the velocities;
//! beyond that [`invert_velocities_numeric`] runs a damped Newton iteration
//! at user-supplied points. Chart degeneracies are reported as the momentum
//! constraints that would have to vanish, never repaired silently.
//!
//! [`examples`] ships eight named models, from a zero Lagrangian over the
//! plane to an su(2) Yang–Mills field with a Higgs triplet; their charts,
//! Hamiltonians, and domain restrictions are exercised against hand-checked
//! displays in the test suite.

mod error;
mod lift;
mod library;
mod newton;
mod pseudofiber;
mod spec;
mod transform;

pub use error::LegendreError;
pub use lift::{cone_tangents, velocity_lift, velocity_lift_symbolic, w_function, ConeTangents};
pub use library::{
    cscalar, cscalar_gauged, ddw_library, dirichlet2x2, example, examples, maxwell2d, maxwell4d,
    point_mech, trivial2x2, ymh, NamedExample, EXAMPLE_NAMES,
};
pub use newton::{invert_velocities_numeric, NEWTON_MAX_ITERATIONS, NEWTON_TOLERANCE};
pub use pseudofiber::{enlarged_pseudofiber, momentum_direction, Pseudofiber};
pub use spec::{LagrangianSpec, Target};
pub use transform::{
    hamiltonian, pseudofiber_level, verify_duality, DualityReport, DualityRow, LegendreResult,
};
