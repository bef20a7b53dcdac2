//! Exact exterior algebra and calculus on coordinate charts.
//!
//! Differential [`Form`]s and [`Multivector`]s are sparse maps from strictly
//! increasing coordinate-index tuples to [`symcore::Expr`] coefficients, so
//! every operation is exact and structural equality decides mathematical
//! equality. The pairing is diagonal on coordinate bases (the determinant
//! convention), and both interior products ([`contract_form`],
//! [`contract_vector`]) are derived from their adjunctions with the wedge,
//! never assigned ad hoc signs.
//!
//! [`factor_decomposable`] splits a decomposable multivector into a wedge of
//! vector fields with a built-in certificate: returned factors always wedge
//! back to the input exactly.

mod chart;
mod form;
mod multivector;
mod sign;
mod terms;

pub use chart::Chart;
pub use form::Form;
pub use multivector::{
    contract_form, contract_vector, decomposable_from_vectors, factor_decomposable, lie_bracket,
    pair, Multivector,
};
