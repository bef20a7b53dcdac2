//! The Legendre transform: eliminate velocities from the W-function.
//!
//! `hamiltonian` solves ∂W/∂v = 0 for the velocities over the chosen
//! momentum chart and substitutes the solution back, producing the
//! Hamiltonian together with both correspondence maps, the velocity
//! kernel when the solve is underdetermined, the symbolic pseudofiber,
//! and the domain restrictions accumulated by the elimination.

use std::collections::BTreeMap;

use exterior::{pair, Form};
use multisympl::MultisymplecticSpace;
use symcore::{solve_linear, Expr, SolveError};

use crate::error::LegendreError;
use crate::lift::{velocity_lift_symbolic, w_function};
use crate::pseudofiber::{enlarged_pseudofiber, momentum_direction, Pseudofiber};
use crate::spec::{LagrangianSpec, Target};

/// Everything the velocity elimination produces over one momentum chart.
#[derive(Clone, Debug)]
pub struct LegendreResult {
    /// Which chart family the transform ran on.
    pub target: Target,
    /// The momentum chart, its canonical form, and its restriction history.
    pub space: MultisymplecticSpace,
    /// The Hamiltonian `H = ⟨z(v*), p⟩ − L(q, v*)` with v* the solved lift.
    pub hamiltonian: Expr,
    /// Momentum components of the image of a symbolic velocity, keyed by
    /// momentum name; free momenta (always including the volume momentum)
    /// are set to zero.
    pub momentum_of_velocity: BTreeMap<String, Expr>,
    /// The solved velocities in terms of the momenta, free velocities set
    /// to zero; total on the velocity names.
    pub velocity_of_momentum: BTreeMap<String, Expr>,
    /// Basis of velocity directions the momenta do not see (empty when the
    /// correspondence inverts); W is constant along each.
    pub velocity_kernel: Vec<BTreeMap<String, Expr>>,
    /// The enlarged pseudofiber at a symbolic point.
    pub pseudofiber: Pseudofiber,
    /// Expressions that must stay nonzero for the velocity solution to be
    /// valid; evaluation off this locus is undefined.
    pub restrictions: Vec<Expr>,
}

/// Run the Legendre transform of `spec` over the chart family `target`.
///
/// Fails with [`LegendreError::Degenerate`] when the velocity system is
/// solvable only where the reported momentum constraints vanish, and with
/// [`LegendreError::NonAffine`] when the Lagrangian is not quadratic in
/// the velocities (use the numeric fallback for such models).
pub fn hamiltonian(spec: &LagrangianSpec, target: Target) -> Result<LegendreResult, LegendreError> {
    let space = spec.space(target)?;
    let w = w_function(spec, &space);
    let vnames = spec.velocity_names();
    let vrefs: Vec<&str> = vnames.iter().map(|s| s.as_str()).collect();
    let equations: Vec<Expr> = vnames.iter().map(|v| w.diff(v)).collect();

    let solution = match solve_linear(&equations, &vrefs) {
        Ok(s) => s,
        Err(SolveError::Inconsistent { residual, .. }) => {
            return Err(LegendreError::Degenerate {
                constraints: vec![residual],
            })
        }
        Err(e) => return Err(e.into()),
    };
    if !solution.conditions.is_empty() {
        return Err(LegendreError::Degenerate {
            constraints: solution.conditions,
        });
    }

    let mut velocity_of_momentum = BTreeMap::new();
    for (name, value) in vnames.iter().zip(&solution.particular) {
        velocity_of_momentum.insert(name.clone(), value.clone());
    }
    let hamiltonian = w.subst_many(&velocity_of_momentum);

    // When the momenta do not pin the velocities down, the substitution is
    // only meaningful because W is constant along the unresolved directions;
    // check that holds for a fully symbolic kernel combination.
    let velocity_kernel: Vec<BTreeMap<String, Expr>> = solution
        .kernel
        .iter()
        .map(|vector| {
            vnames
                .iter()
                .cloned()
                .zip(vector.iter().cloned())
                .collect()
        })
        .collect();
    if !velocity_kernel.is_empty() {
        let free = w.free_vars();
        let mut prefix = String::from("gauge");
        while free.iter().any(|v| v.starts_with(prefix.as_str())) {
            prefix.push('_');
        }
        let mut shifted = BTreeMap::new();
        for (i, name) in vnames.iter().enumerate() {
            let mut value = solution.particular[i].clone();
            for (j, vector) in solution.kernel.iter().enumerate() {
                value = value + &Expr::var(&format!("{prefix}{j}")) * &vector[i];
            }
            shifted.insert(name.clone(), value);
        }
        assert_eq!(
            w.subst_many(&shifted),
            hamiltonian,
            "W must be constant along the velocity kernel for the transform to be well defined"
        );
    }

    let pseudofiber = enlarged_pseudofiber(spec, &space, &BTreeMap::new())?;
    let momentum_of_velocity: BTreeMap<String, Expr> = pseudofiber
        .momenta
        .iter()
        .cloned()
        .zip(pseudofiber.particular_components.iter().cloned())
        .collect();

    Ok(LegendreResult {
        target,
        space,
        hamiltonian,
        momentum_of_velocity,
        velocity_of_momentum,
        velocity_kernel,
        pseudofiber,
        restrictions: solution.assumptions,
    })
}

/// One row of the duality check: a momentum name and the exact residual
/// `∂H/∂c − ⟨z(v(p)), ∂θ/∂c⟩` after binding the supplied point.
#[derive(Clone, Debug)]
pub struct DualityRow {
    pub momentum: String,
    pub residual: Expr,
}

/// Exact residuals of the fiber-derivative duality per momentum coordinate.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub rows: Vec<DualityRow>,
}

impl DualityReport {
    /// True when every residual is identically zero.
    pub fn all_zero(&self) -> bool {
        self.rows.iter().all(|r| r.residual.is_zero())
    }
}

/// Check `∂H/∂c = ⟨z(v(p)), ∂θ/∂c⟩` for each momentum coordinate `c`,
/// optionally at a concrete point. Points on the excluded locus of a
/// restriction are rejected with [`LegendreError::OutsideDomain`].
pub fn verify_duality(
    spec: &LagrangianSpec,
    result: &LegendreResult,
    point: &BTreeMap<String, Expr>,
) -> Result<DualityReport, LegendreError> {
    for guard in &result.restrictions {
        if guard.subst_many(point).is_zero() {
            return Err(LegendreError::OutsideDomain {
                guard: guard.clone(),
            });
        }
    }
    let z = velocity_lift_symbolic(spec, &result.space);
    let mut rows = Vec::new();
    for label in result.space.momenta() {
        let direction = momentum_direction(&result.space, &label.name);
        let lhs = result.hamiltonian.diff(&label.name);
        let rhs = pair(&z, &direction).subst_many(&result.velocity_of_momentum);
        let residual = (&lhs - &rhs).subst_many(point);
        rows.push(DualityRow {
            momentum: label.name.clone(),
            residual,
        });
    }
    Ok(DualityReport { rows })
}

/// A point of the level-`h` pseudofiber over the bound point: a momentum
/// form satisfying ∂W/∂v = 0 with `H = h`, off every excluded locus.
///
/// The representative is found by walking integer multiples of the cone
/// annihilator directions away from the particular solution until all
/// domain restrictions are nonzero, then shifting along the base volume
/// direction, which moves `H` by exactly the shift.
pub fn pseudofiber_level(
    spec: &LagrangianSpec,
    result: &LegendreResult,
    values: &BTreeMap<String, Expr>,
    h: &Expr,
) -> Result<Form, LegendreError> {
    let pf = enlarged_pseudofiber(spec, &result.space, values)?;
    let volume = result.space.base_volume();
    let cone: Vec<&Form> = pf.kernel.iter().skip(1).collect();
    let mut last_guard: Option<Expr> = None;
    'offsets: for c in 0..=8_i64 {
        let mut candidate = pf.particular.clone();
        let scale = Expr::int(c);
        for form in &cone {
            candidate = candidate.add(&form.scale(&scale));
        }
        let components = Pseudofiber::components_of(&result.space, &candidate);
        let mut bound = values.clone();
        for (name, value) in &components {
            bound.insert(name.clone(), value.clone());
        }
        for guard in &result.restrictions {
            if guard.subst_many(&bound).is_zero() {
                last_guard = Some(guard.clone());
                continue 'offsets;
            }
        }
        let level = result.hamiltonian.subst_many(&bound);
        let lambda = h - &level;
        return Ok(candidate.add(&volume.scale(&lambda)));
    }
    Err(LegendreError::NoInteriorPoint {
        guard: last_guard.unwrap_or_else(Expr::zero),
    })
}
