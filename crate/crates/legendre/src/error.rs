//! Failure modes of the correspondence.

use multisympl::SpaceError;
use symcore::{Expr, SolveError};

#[derive(thiserror::Error, Debug, Clone)]
pub enum LegendreError {
    #[error(transparent)]
    Space(#[from] SpaceError),

    /// The velocity elimination is solvable only where the listed momentum
    /// expressions vanish; the chosen chart cuts through the image of the
    /// Legendre map.
    #[error("degenerate correspondence: solvable only where {constraints:?} vanish")]
    Degenerate { constraints: Vec<Expr> },

    /// Symbolic elimination needs equations affine in the unknowns; steeper
    /// Lagrangians go through the numeric inversion instead.
    #[error(transparent)]
    NonAffine(#[from] SolveError),

    #[error("the Lagrangian mentions `{name}`, which is not a declared coordinate, velocity, or parameter")]
    UndeclaredSymbol { name: String },

    #[error("`{name}` is declared twice (or collides with a velocity name)")]
    NameCollision { name: String },

    /// A substitution point lies on the excluded locus of the result.
    #[error("point violates the domain restriction {guard} != 0")]
    OutsideDomain { guard: Expr },

    /// The pseudofiber has no representative with all guards nonzero among
    /// the searched kernel offsets.
    #[error("no pseudofiber representative found off the excluded locus {guard} = 0")]
    NoInteriorPoint { guard: Expr },

    #[error("numeric inversion failed: {message}")]
    Numeric { message: String },
}
