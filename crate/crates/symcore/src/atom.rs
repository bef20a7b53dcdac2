//! Atoms: the opaque multiplicative generators of polynomials.
//!
//! An atom is either a plain variable or a formal function application.
//! Applications carry per-argument derivative multiplicities, so mixed
//! partials commute by construction.

use crate::expr::Expr;

/// A formal function application `symbol(args...)` differentiated
/// `dcounts[i]` times with respect to its `i`-th argument slot.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AppAtom {
    pub symbol: String,
    pub dcounts: Vec<u32>,
    pub args: Vec<Expr>,
}

impl AppAtom {
    pub fn new(symbol: impl Into<String>, args: Vec<Expr>) -> Self {
        let args_len = args.len();
        AppAtom {
            symbol: symbol.into(),
            dcounts: vec![0; args_len],
            args,
        }
    }

    /// Total derivative order across all argument slots.
    pub fn order(&self) -> u32 {
        self.dcounts.iter().sum()
    }
}

/// A multiplicative generator: variable or formal application.
///
/// The derived `Ord` (variables before applications, then lexicographic)
/// fixes the deterministic atom precedence used by the monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Atom {
    Var(String),
    App(AppAtom),
}

impl Atom {
    pub fn var(name: impl Into<String>) -> Self {
        Atom::Var(name.into())
    }

    pub fn is_var(&self, name: &str) -> bool {
        matches!(self, Atom::Var(v) if v == name)
    }
}

/// Names of function symbols with built-in derivative tables.
pub const BUILTINS: &[&str] = &["sin", "cos", "exp"];

pub fn is_builtin(symbol: &str) -> bool {
    BUILTINS.contains(&symbol)
}
