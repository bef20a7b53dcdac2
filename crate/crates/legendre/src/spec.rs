//! Lagrangian problem descriptions.
//!
//! A [`LagrangianSpec`] holds everything needed to run the Legendre
//! correspondence: the base/fiber dimensions and names, the Lagrangian
//! density as an expression in coordinates and velocities, the diagonal
//! metric used by the shipped models, declared parameter symbols, and any
//! extra momentum constraints (such as the antisymmetrization of 1-form
//! field momenta) that cut the first-jet chart further.

use std::collections::BTreeSet;

use multisympl::{Constraint, MultisymplecticSpace};
use symcore::Expr;

use crate::error::LegendreError;

/// Which momentum chart the correspondence is run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// The full chart of n-form momenta over the configuration space.
    Full,
    /// The de Donder–Weyl chart: only `e` and the first-jet momenta
    /// `p{μ}_{i}` survive, then any extra constraints of the spec apply.
    DeDonderWeyl,
}

/// A first-order variational problem over a trivial fiber bundle.
#[derive(Clone, Debug)]
pub struct LagrangianSpec {
    n: usize,
    k: usize,
    base_names: Vec<String>,
    fiber_names: Vec<String>,
    lagrangian: Expr,
    metric: Vec<i64>,
    parameters: Vec<String>,
    ddw_extra: Vec<Constraint>,
}

impl LagrangianSpec {
    /// Validates that the Lagrangian only mentions declared coordinates,
    /// velocities, and parameters, and that no velocity name collides with
    /// a coordinate.
    pub fn new(
        base_names: &[&str],
        fiber_names: &[&str],
        lagrangian: Expr,
        metric: &[i64],
        parameters: &[&str],
    ) -> Result<Self, LegendreError> {
        let n = base_names.len();
        let k = fiber_names.len();
        assert!(n >= 1 && k >= 1, "need at least one base and one fiber direction");
        assert_eq!(metric.len(), n, "one diagonal metric entry per base direction");
        assert!(metric.iter().all(|&g| g != 0), "metric entries must be nonzero");

        let spec = LagrangianSpec {
            n,
            k,
            base_names: base_names.iter().map(|s| s.to_string()).collect(),
            fiber_names: fiber_names.iter().map(|s| s.to_string()).collect(),
            lagrangian,
            metric: metric.to_vec(),
            parameters: parameters.iter().map(|s| s.to_string()).collect(),
            ddw_extra: Vec::new(),
        };

        let mut declared: BTreeSet<String> = BTreeSet::new();
        for name in spec
            .base_names
            .iter()
            .chain(spec.fiber_names.iter())
            .chain(spec.parameters.iter())
        {
            if !declared.insert(name.clone()) {
                return Err(LegendreError::NameCollision { name: name.clone() });
            }
        }
        for v in spec.velocity_names() {
            if !declared.insert(v.clone()) {
                return Err(LegendreError::NameCollision { name: v });
            }
        }
        for sym in spec.lagrangian.free_vars() {
            if !declared.contains(&sym) {
                return Err(LegendreError::UndeclaredSymbol { name: sym });
            }
        }
        Ok(spec)
    }

    /// Extra momentum constraints applied after the first-jet cut when the
    /// target is [`Target::DeDonderWeyl`].
    pub fn with_ddw_constraints(mut self, constraints: Vec<Constraint>) -> Self {
        self.ddw_extra = constraints;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn base_names(&self) -> &[String] {
        &self.base_names
    }

    pub fn fiber_names(&self) -> &[String] {
        &self.fiber_names
    }

    pub fn lagrangian(&self) -> &Expr {
        &self.lagrangian
    }

    /// Diagonal entries of the base metric η.
    pub fn metric(&self) -> &[i64] {
        &self.metric
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn ddw_extra(&self) -> &[Constraint] {
        &self.ddw_extra
    }

    /// Name of the velocity of fiber coordinate `i` in base direction `μ`
    /// (both 1-based): `v` when the problem has a single velocity, else
    /// `v{i}_{μ}`. A single index sits on each side of the underscore, so
    /// the name stays unambiguous at any dimension.
    pub fn velocity_name(&self, i: usize, mu: usize) -> String {
        assert!((1..=self.k).contains(&i) && (1..=self.n).contains(&mu));
        if self.n == 1 && self.k == 1 {
            "v".to_string()
        } else {
            format!("v{i}_{mu}")
        }
    }

    /// All velocity names, fiber-major: `v1_1, v1_2, …, v2_1, …`.
    pub fn velocity_names(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.n * self.k);
        for i in 1..=self.k {
            for mu in 1..=self.n {
                out.push(self.velocity_name(i, mu));
            }
        }
        out
    }

    /// The `(i, μ)` pairs in the same order as [`Self::velocity_names`].
    pub fn velocity_indices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n * self.k);
        for i in 1..=self.k {
            for mu in 1..=self.n {
                out.push((i, mu));
            }
        }
        out
    }

    /// Builds the momentum chart for the requested target.
    pub fn space(&self, target: Target) -> Result<MultisymplecticSpace, LegendreError> {
        match target {
            Target::Full => Ok(MultisymplecticSpace::build_lambda_n_named(
                self.n,
                self.k,
                &self.base_names,
                &self.fiber_names,
            )?),
            Target::DeDonderWeyl => {
                let jet = MultisymplecticSpace::first_jet_dual(
                    self.n,
                    &self.base_names,
                    &self.fiber_names,
                )?;
                if self.ddw_extra.is_empty() {
                    Ok(jet)
                } else {
                    Ok(jet.restrict(&self.ddw_extra)?)
                }
            }
        }
    }
}
