//! Exact affine solving by fraction-free (Bareiss) elimination.
//!
//! The solver accepts expressions affine in the chosen unknowns with
//! arbitrary symbolic coefficients, and returns the complete solution set:
//! a particular solution plus a kernel basis. Rows that reduce to
//! `0 = nonzero constant` are inconsistencies carrying the exact
//! combination of input equations that produced them; rows reducing to
//! `0 = (expression in parameters)` become consistency conditions.
//! Nonconstant pivots are reported as nonvanishing assumptions.

use crate::expr::Expr;

#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub unknowns: Vec<String>,
    /// One entry per unknown; free unknowns are set to zero.
    pub particular: Vec<Expr>,
    /// Basis of the homogeneous solution space, one vector per free unknown.
    pub kernel: Vec<Vec<Expr>>,
    /// Expressions in the parameters that must vanish for the system to be
    /// solvable (empty when the system is unconditionally consistent).
    pub conditions: Vec<Expr>,
    /// Pivot expressions assumed nonzero by the elimination.
    pub assumptions: Vec<Expr>,
}

impl AffineSolution {
    /// Solution with the kernel coefficients bound to the given parameter
    /// expressions.
    pub fn with_kernel_coeffs(&self, coeffs: &[Expr]) -> Vec<Expr> {
        assert_eq!(coeffs.len(), self.kernel.len());
        let mut out = self.particular.clone();
        for (c, basis) in coeffs.iter().zip(&self.kernel) {
            for (o, b) in out.iter_mut().zip(basis) {
                *o = &*o + &(c * b);
            }
        }
        out
    }
}

#[derive(thiserror::Error, Debug, Clone)]
pub enum SolveError {
    #[error("equation {equation_index} is not affine in `{unknown}`: coefficient {term}")]
    NonAffine {
        equation_index: usize,
        unknown: String,
        term: Expr,
    },
    #[error("inconsistent system: a combination of the equations reduces to {residual} = 0")]
    Inconsistent {
        residual: Expr,
        /// Coefficients such that sum(witness[i] * equations[i]) = residual.
        witness: Vec<Expr>,
    },
}

/// Solve `equations = 0` for `unknowns` over the field of symbolic
/// expressions.
pub fn solve_linear(equations: &[Expr], unknowns: &[&str]) -> Result<AffineSolution, SolveError> {
    let m = unknowns.len();
    let n = equations.len();

    // Extract the affine structure: eq_i = sum_j a[i][j] * u_j - rhs_i.
    let mut a: Vec<Vec<Expr>> = Vec::with_capacity(n);
    let mut rhs: Vec<Expr> = Vec::with_capacity(n);
    for (i, eq) in equations.iter().enumerate() {
        let mut row = Vec::with_capacity(m);
        let mut residual = eq.clone();
        for &u in unknowns {
            let c = eq.diff(u);
            for &v in unknowns {
                if c.contains_var(v) {
                    return Err(SolveError::NonAffine {
                        equation_index: i,
                        unknown: u.to_string(),
                        term: c,
                    });
                }
            }
            residual = residual - &c * &Expr::var(u);
            row.push(c);
        }
        // The remainder must be unknown-free (catches unknowns hidden in
        // denominators or inside formal applications).
        for &u in unknowns {
            if residual.contains_var(u) {
                return Err(SolveError::NonAffine {
                    equation_index: i,
                    unknown: u.to_string(),
                    term: residual,
                });
            }
        }
        rhs.push(-residual);
        a.push(row);
    }

    // Bareiss fraction-free elimination on [A | rhs | I]; the identity block
    // tracks each row as a combination of the input equations.
    let width = m + 1 + n;
    let mut mat: Vec<Vec<Expr>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row.push(rhs[i].clone());
            for j in 0..n {
                row.push(if i == j { Expr::one() } else { Expr::zero() });
            }
            row
        })
        .collect();

    let mut assumptions: Vec<Expr> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut prev_pivot = Expr::one();
    let mut rank = 0usize;

    for col in 0..m {
        // Choose the simplest nonzero pivot in this column.
        let candidate = (rank..n)
            .filter(|&r| !mat[r][col].is_zero())
            .min_by_key(|&r| pivot_complexity(&mat[r][col], r));
        let Some(pr) = candidate else { continue };
        mat.swap(rank, pr);
        let pivot = mat[rank][col].clone();
        if !pivot.is_constant() {
            push_assumption(&mut assumptions, &pivot);
        }
        for r in 0..n {
            if r == rank {
                continue;
            }
            let factor = mat[r][col].clone();
            for cc in 0..width {
                let v = &(&pivot * &mat[r][cc]) - &(&factor * &mat[rank][cc]);
                mat[r][cc] = &v / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        pivot_cols.push(col);
        rank += 1;
        if rank == n {
            break;
        }
    }

    // Inconsistencies and conditions from the eliminated rows.
    let mut conditions = Vec::new();
    for row in mat.iter().skip(rank) {
        if row[..m].iter().all(|e| e.is_zero()) {
            let residual = row[m].clone();
            if residual.is_zero() {
                continue;
            }
            // witness * equations = a[..]*u - residual, and the coefficient
            // block is zero, so witness * equations = -residual identically.
            let witness: Vec<Expr> = row[m + 1..].iter().map(|w| -w).collect();
            if residual.is_constant() {
                return Err(SolveError::Inconsistent { residual, witness });
            }
            push_unique(&mut conditions, residual.clone());
        }
    }

    // Back-substitution: after full (Gauss-Jordan style) elimination each
    // pivot row determines its unknown in terms of the free columns.
    let free_cols: Vec<usize> = (0..m).filter(|c| !pivot_cols.contains(c)).collect();
    let mut particular = vec![Expr::zero(); m];
    let mut kernel: Vec<Vec<Expr>> = free_cols.iter().map(|_| vec![Expr::zero(); m]).collect();

    for (r, &pc) in pivot_cols.iter().enumerate() {
        let pivot = mat[r][pc].clone();
        particular[pc] = &mat[r][m] / &pivot;
        for (ki, &fc) in free_cols.iter().enumerate() {
            kernel[ki][pc] = -(&mat[r][fc] / &pivot);
        }
    }
    for (ki, &fc) in free_cols.iter().enumerate() {
        kernel[ki][fc] = Expr::one();
    }

    Ok(AffineSolution {
        unknowns: unknowns.iter().map(|s| s.to_string()).collect(),
        particular,
        kernel,
        conditions,
        assumptions,
    })
}

fn pivot_complexity(e: &Expr, row: usize) -> (u8, usize, usize) {
    let constant = u8::from(!e.is_constant());
    let size = e.numerator().0.len() + e.denominator().0.len();
    (constant, size, row)
}

fn push_unique(list: &mut Vec<Expr>, e: Expr) {
    let normalized = normalize_sign(e);
    if !list.contains(&normalized) {
        list.push(normalized);
    }
}

/// Record a pivot as a nonvanishing assumption. Fraction-free elimination
/// accumulates earlier pivots as factors of later ones, so the pivot's
/// numerator is first reduced by the factors already assumed nonzero;
/// only the genuinely new factor is recorded, and a pivot whose numerator
/// reduces to a constant adds nothing.
fn push_assumption(list: &mut Vec<Expr>, pivot: &Expr) {
    let mut num = pivot.numerator().clone();
    if num.is_constant() {
        return;
    }
    loop {
        let mut divided = false;
        for known in list.iter() {
            let factor = known.numerator();
            if factor.is_constant() {
                continue;
            }
            while let Some(q) = num.exact_div(factor) {
                num = q;
                divided = true;
                if num.is_constant() {
                    return;
                }
            }
        }
        if !divided {
            break;
        }
    }
    push_unique(list, Expr::from_poly(num));
}

/// Scale so the representative is stable under sign flips.
fn normalize_sign(e: Expr) -> Expr {
    use num::Signed;
    if let Some((_, lc)) = e.numerator().leading() {
        if lc.is_negative() {
            return -&e;
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unique_solution() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let x = Expr::var("x");
        let y = Expr::var("y");
        let eqs = [&x + &y - Expr::int(3), &x - &y - Expr::int(1)];
        let sol = solve_linear(&eqs, &["x", "y"]).unwrap();
        assert_eq!(sol.particular, vec![Expr::int(2), Expr::int(1)]);
        assert!(sol.kernel.is_empty());
        assert!(sol.conditions.is_empty());
    }

    #[test]
    fn kernel_and_symbolic_substitution_checks() {
        // x + y + z = 1: one pivot, two free unknowns.
        let eq = Expr::var("x") + Expr::var("y") + Expr::var("z") - Expr::one();
        let sol = solve_linear(std::slice::from_ref(&eq), &["x", "y", "z"]).unwrap();
        assert_eq!(sol.kernel.len(), 2);
        // particular + t0*k0 + t1*k1 substitutes to exactly zero.
        let general = sol.with_kernel_coeffs(&[Expr::var("t0"), Expr::var("t1")]);
        let mut check = eq;
        for (u, val) in ["x", "y", "z"].iter().zip(&general) {
            check = check.subst(u, val);
        }
        assert!(check.is_zero());
    }

    #[test]
    fn inconsistency_carries_verifying_witness() {
        // x + y = 1, x + y = 2
        let e0 = Expr::var("x") + Expr::var("y") - Expr::one();
        let e1 = Expr::var("x") + Expr::var("y") - Expr::int(2);
        let eqs = [e0.clone(), e1.clone()];
        let err = solve_linear(&eqs, &["x", "y"]).unwrap_err();
        match err {
            SolveError::Inconsistent { residual, witness } => {
                let combo = &witness[0] * &e0 + &witness[1] * &e1;
                assert_eq!(combo, residual);
                assert!(!combo.is_zero());
            }
            other => panic!("expected Inconsistent, got {other:?}"),
        }
    }

    #[test]
    fn parameter_conditions_are_reported() {
        // v = a and v = b is solvable only when a - b = 0.
        let e0 = Expr::var("v") - Expr::var("a");
        let e1 = Expr::var("v") - Expr::var("b");
        let sol = solve_linear(&[e0, e1], &["v"]).unwrap();
        assert_eq!(sol.conditions.len(), 1);
        let c = &sol.conditions[0];
        assert!(c == &(Expr::var("a") - Expr::var("b")) || c == &(Expr::var("b") - Expr::var("a")));
    }

    #[test]
    fn nonaffine_is_detected() {
        let v = Expr::var("v");
        assert!(matches!(
            solve_linear(&[&v * &v - Expr::one()], &["v"]),
            Err(SolveError::NonAffine { .. })
        ));
        assert!(matches!(
            solve_linear(&[v.recip() - Expr::one()], &["v"]),
            Err(SolveError::NonAffine { .. })
        ));
        assert!(matches!(
            solve_linear(&[Expr::app("U", vec![v]) - Expr::one()], &["v"]),
            Err(SolveError::NonAffine { .. })
        ));
    }

    #[test]
    fn nonconstant_pivot_recorded_as_assumption() {
        // r*v - p = 0  =>  v = p/r assuming r != 0.
        let eq = Expr::var("r") * Expr::var("v") - Expr::var("p");
        let sol = solve_linear(std::slice::from_ref(&eq), &["v"]).unwrap();
        assert_eq!(sol.particular[0], Expr::var("p") / Expr::var("r"));
        assert_eq!(sol.assumptions, vec![Expr::var("r")]);
    }
}
