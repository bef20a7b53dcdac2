//! Exact symbolic arithmetic over multivariate rational functions.
//!
//! The central type is [`Expr`], a quotient of two multivariate polynomials
//! with arbitrary-precision rational coefficients, kept in a canonical form
//! (gcd-reduced, monic denominator) so that structural equality decides
//! mathematical equality. Variables and opaque function applications such as
//! `V(s)` or a mixed partial `D[1,1]U(x, y)` are both first-class atoms, so
//! expressions can carry unevaluated functions through differentiation,
//! substitution, and linear solving.
//!
//! The crate provides:
//! - [`Expr`]: construction, arithmetic, exact differentiation ([`Expr::diff`]),
//!   substitution ([`Expr::subst`], [`Expr::map_atoms`]), and numeric
//!   evaluation ([`Expr::eval_f64`], [`Expr::eval_rational`]).
//! - [`parse_expr`]: an infix parser with `p^1_2`-style identifier sugar.
//! - [`solve_linear`]: exact affine solving with kernel bases, consistency
//!   conditions, inconsistency witnesses, and pivot assumptions.
//! - [`RuleSet`]: fixed-point rewriting of formal second derivatives, used to
//!   close differentiation under field equations.

mod atom;
mod expr;
mod parse;
mod poly;
mod rewrite;
mod solve;

pub use atom::{is_builtin, AppAtom, Atom, BUILTINS};
pub use expr::{EvalError, Expr, MapEnv, NumEnv};
pub use parse::{parse_expr, ParseError};
pub use poly::{poly_gcd, poly_gcd_many, Monomial, Poly};
pub use rewrite::{DerivativeReduction, FunctionSymbol, RuleSet};
pub use solve::{solve_linear, AffineSolution, SolveError};
