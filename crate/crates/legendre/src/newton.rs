//! Damped Newton inversion of the velocity–momentum relations, for
//! Lagrangians whose ∂W/∂v = 0 system is not affine in the velocities.
//!
//! The iteration runs at a user-supplied numeric point (coordinates and
//! momenta) from an explicit initial guess; there is no guess heuristic,
//! because the correspondence is genuinely multivalued for non-convex
//! Lagrangians and the caller must pick the branch.

use std::collections::BTreeMap;

use multisympl::MultisymplecticSpace;
use symcore::{Expr, MapEnv};

use crate::error::LegendreError;
use crate::lift::w_function;
use crate::spec::LagrangianSpec;

/// Convergence threshold on the max-norm of the residual ∂W/∂v.
pub const NEWTON_TOLERANCE: f64 = 1e-12;

/// Iteration cap; exceeding it reports the final residual instead of looping.
pub const NEWTON_MAX_ITERATIONS: usize = 50;

/// Solve ∂W/∂v = 0 numerically for the velocities.
///
/// `point` binds every non-velocity symbol the residuals mention
/// (coordinates, momenta, parameters); `guess` must bind every velocity.
/// Returns the converged velocity values keyed by name.
pub fn invert_velocities_numeric(
    spec: &LagrangianSpec,
    space: &MultisymplecticSpace,
    point: &BTreeMap<String, f64>,
    guess: &BTreeMap<String, f64>,
) -> Result<BTreeMap<String, f64>, LegendreError> {
    let vnames = spec.velocity_names();
    let mut v: Vec<f64> = Vec::with_capacity(vnames.len());
    for name in &vnames {
        match guess.get(name) {
            Some(value) => v.push(*value),
            None => {
                return Err(LegendreError::Numeric {
                    message: format!("initial guess does not bind the velocity `{name}`"),
                })
            }
        }
    }

    let w = w_function(spec, space);
    let residuals: Vec<Expr> = vnames.iter().map(|name| w.diff(name)).collect();
    let jacobian: Vec<Vec<Expr>> = residuals
        .iter()
        .map(|r| vnames.iter().map(|name| r.diff(name)).collect())
        .collect();

    let mut env = MapEnv::default();
    for (name, value) in point {
        env.set(name.clone(), *value);
    }

    let eval_residuals = |env: &mut MapEnv, v: &[f64]| -> Result<Vec<f64>, LegendreError> {
        for (name, value) in vnames.iter().zip(v) {
            env.set(name.clone(), *value);
        }
        residuals
            .iter()
            .map(|r| {
                r.eval_f64(env).map_err(|e| LegendreError::Numeric {
                    message: e.to_string(),
                })
            })
            .collect()
    };

    let mut r = eval_residuals(&mut env, &v)?;
    let mut norm = max_abs(&r);
    for _ in 0..NEWTON_MAX_ITERATIONS {
        if norm <= NEWTON_TOLERANCE {
            return Ok(vnames.into_iter().zip(v).collect());
        }
        let mut matrix: Vec<Vec<f64>> = Vec::with_capacity(residuals.len());
        for row in &jacobian {
            let mut out = Vec::with_capacity(row.len());
            for entry in row {
                out.push(entry.eval_f64(&env).map_err(|e| LegendreError::Numeric {
                    message: e.to_string(),
                })?);
            }
            matrix.push(out);
        }
        let minus_r: Vec<f64> = r.iter().map(|x| -x).collect();
        let step = solve_dense(matrix, minus_r).ok_or_else(|| LegendreError::Numeric {
            message: "singular Jacobian; pick a different initial guess".to_string(),
        })?;

        // Halve the step until the residual actually shrinks.
        let mut t = 1.0_f64;
        loop {
            let trial: Vec<f64> = v.iter().zip(&step).map(|(a, s)| a + t * s).collect();
            let r_trial = eval_residuals(&mut env, &trial)?;
            let norm_trial = max_abs(&r_trial);
            if norm_trial < norm || norm_trial <= NEWTON_TOLERANCE {
                v = trial;
                r = r_trial;
                norm = norm_trial;
                break;
            }
            t *= 0.5;
            if t < 1e-6 {
                return Err(LegendreError::Numeric {
                    message: format!(
                        "line search stalled with residual {norm:.3e}; the guess is not in a basin"
                    ),
                });
            }
        }
    }
    if norm <= NEWTON_TOLERANCE {
        return Ok(vnames.into_iter().zip(v).collect());
    }
    Err(LegendreError::Numeric {
        message: format!(
            "no convergence after {NEWTON_MAX_ITERATIONS} iterations; final residual {norm:.3e}"
        ),
    })
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Gaussian elimination with partial pivoting on a dense system.
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let m = b.len();
    let scale = a
        .iter()
        .flatten()
        .fold(0.0_f64, |s, x| s.max(x.abs()))
        .max(1.0);
    for col in 0..m {
        let pivot_row = (col..m)
            .max_by(|&r1, &r2| a[r1][col].abs().total_cmp(&a[r2][col].abs()))?;
        if a[pivot_row][col].abs() <= 1e-14 * scale {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in col + 1..m {
            let f = a[r][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..m {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; m];
    for col in (0..m).rev() {
        let mut s = b[col];
        for c in col + 1..m {
            s -= a[col][c] * x[c];
        }
        x[col] = s / a[col][col];
    }
    Some(x)
}
