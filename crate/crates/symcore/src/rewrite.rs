//! User-registered rewrite rules for formal derivative symbols.
//!
//! A rule eliminates second derivatives of one symbol along a chosen
//! argument axis in favor of lower-order data (the shape of a linear PDE
//! solved for its leading derivative). Rules are applied after
//! normalization until a fixed point; termination holds because each
//! application strictly reduces the axis derivative count and replacements
//! never reintroduce it.

use crate::atom::{AppAtom, Atom};
use crate::expr::Expr;

/// A formal function symbol: a name with a fixed arity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctionSymbol {
    pub name: String,
    pub arity: usize,
}

impl FunctionSymbol {
    pub fn formal(name: impl Into<String>, arity: usize) -> Self {
        FunctionSymbol {
            name: name.into(),
            arity,
        }
    }

    pub fn call(&self, args: Vec<Expr>) -> Expr {
        assert_eq!(args.len(), self.arity, "arity mismatch for {}", self.name);
        Expr::app(self.name.clone(), args)
    }
}

/// Replacement template: `d^2/d(axis)^2 symbol = sum coeff * symbol^(+delta)`.
#[derive(Clone, Debug)]
pub struct DerivativeReduction {
    pub symbol: String,
    pub axis: usize,
    /// `(coefficient, extra derivative counts)` pairs; the axis entry of
    /// every delta must be zero so rewriting terminates.
    pub terms: Vec<(Expr, Vec<u32>)>,
}

#[derive(Clone, Debug, Default)]
pub struct RuleSet {
    rules: Vec<DerivativeReduction>,
}

impl RuleSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_second_order_reduction(
        &mut self,
        symbol: impl Into<String>,
        axis: usize,
        terms: Vec<(Expr, Vec<u32>)>,
    ) -> &mut Self {
        for (_, delta) in &terms {
            assert!(
                delta.get(axis).copied().unwrap_or(0) == 0,
                "replacement reintroduces the reduced axis"
            );
        }
        self.rules.push(DerivativeReduction {
            symbol: symbol.into(),
            axis,
            terms,
        });
        self
    }

    pub fn rules(&self) -> &[DerivativeReduction] {
        &self.rules
    }

    fn matching_rule(&self, app: &AppAtom) -> Option<&DerivativeReduction> {
        self.rules.iter().find(|r| {
            r.symbol == app.symbol && app.dcounts.get(r.axis).copied().unwrap_or(0) >= 2
        })
    }

    /// Rewrite to a fixed point. Each pass replaces every currently matching
    /// atom; passes repeat until no atom matches.
    pub fn apply(&self, e: &Expr) -> Expr {
        if self.rules.is_empty() {
            return e.clone();
        }
        let mut cur = e.clone();
        loop {
            let changed = std::cell::Cell::new(false);
            let next = cur.map_atoms(&|a| {
                let Atom::App(app) = a else { return None };
                let rule = self.matching_rule(app)?;
                changed.set(true);
                let mut out = Expr::zero();
                for (coeff, delta) in &rule.terms {
                    let mut d = app.dcounts.clone();
                    d[rule.axis] -= 2;
                    for (slot, extra) in delta.iter().enumerate() {
                        d[slot] += extra;
                    }
                    out = out
                        + coeff.clone()
                            * Expr::app_d(app.symbol.clone(), d, app.args.clone());
                }
                Some(out)
            });
            cur = next;
            if !changed.get() {
                return cur;
            }
        }
    }
}
