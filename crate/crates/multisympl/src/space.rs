//! Charts on the bundle of n-forms over a product configuration space,
//! together with the canonical n-form, its differential, and restrictions
//! cut out by momentum constraints.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use exterior::{contract_form, Chart, Form, Multivector};
use itertools::Itertools;
use symcore::Expr;
use thiserror::Error;

use crate::nondeg::{form_kernel, Nondegeneracy};

/// Hard cap on chart dimension; beyond this the momentum count is a sign
/// that the request was a mistake rather than a model.
pub const MAX_DIM: usize = 512;

/// Where a momentum coordinate sits inside the canonical n-form.
///
/// The coordinate named `name` multiplies the basis n-form
/// `dy^{fiber} ∧ (∂_{removed_base} ⌟ ω)` where `ω` is the base volume form
/// and both index lists are ascending and 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentumLabel {
    pub name: String,
    pub removed_base: Vec<usize>,
    pub fiber: Vec<usize>,
}

/// A single restriction applied to a momentum coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// Pin the coordinate to zero and drop it from the chart.
    Kill(String),
    /// Replace `kill` by `sign * keep` everywhere and drop it from the chart.
    Identify {
        kill: String,
        keep: String,
        sign: i8,
    },
    /// Give a momentum coordinate a new name.
    Rename { from: String, to: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("chart for n={n}, k={k} would need {dim} coordinates; the limit is {max}", max = MAX_DIM)]
    TooLarge { n: usize, k: usize, dim: usize },
    #[error("constraint references unknown coordinate `{0}`")]
    UnknownCoordinate(String),
    #[error("constraint touches `{0}`, which is not a momentum coordinate")]
    NotMomentum(String),
    #[error("coordinate name `{0}` is already taken")]
    NameTaken(String),
    #[error("coordinate `{0}` appears in conflicting constraints")]
    ConflictingConstraint(String),
}

/// A chart of the n-form bundle (or a constrained piece of it), carrying the
/// canonical n-form θ when one exists and the closed (n+1)-form Ω.
#[derive(Clone, Debug)]
pub struct MultisymplecticSpace {
    chart: Arc<Chart>,
    n: usize,
    k: usize,
    theta: Option<Form>,
    omega: Form,
    momenta: Vec<MomentumLabel>,
    constraints: Vec<Constraint>,
    nondeg: OnceLock<Nondegeneracy>,
}

fn binomial(n: usize, r: usize) -> usize {
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u128::from(u32::MAX) {
            return usize::MAX;
        }
    }
    acc as usize
}

fn index_group(indices: &[usize], wide: bool) -> String {
    if wide {
        indices.iter().map(|i| i.to_string()).join(".")
    } else {
        indices.iter().map(|i| i.to_string()).collect()
    }
}

fn momentum_name(n: usize, k: usize, removed_base: &[usize], fiber: &[usize]) -> String {
    if fiber.is_empty() {
        return "e".to_string();
    }
    if n == 1 && k == 1 {
        return "p".to_string();
    }
    if n == 2 && k == 2 && fiber.len() == 2 {
        return "r".to_string();
    }
    // Multi-digit indices get a separator so distinct index sets cannot
    // collapse to the same concatenated name.
    let wide = n >= 10 || k >= 10;
    format!(
        "p{}_{}",
        index_group(removed_base, wide),
        index_group(fiber, wide)
    )
}

impl MultisymplecticSpace {
    /// The full chart of n-forms over an (n+k)-dimensional product space,
    /// with one momentum coordinate per strictly increasing n-multi-index.
    ///
    /// Base coordinates are `x1..xn` (`t` when n = 1), fiber coordinates
    /// `y1..yk` (`y` when k = 1).  Momentum coordinates take the customary
    /// aliases: `e` for the base volume component, `p{μ}_{i}` for one fiber
    /// direction, `p{μν}_{ij}` for two, and `r` for the top component when
    /// n = k = 2; the single momentum of n = k = 1 is `p`.
    pub fn build_lambda_n(n: usize, k: usize) -> Result<Self, SpaceError> {
        let base: Vec<String> = if n == 1 {
            vec!["t".to_string()]
        } else {
            (1..=n).map(|m| format!("x{m}")).collect()
        };
        let fiber: Vec<String> = if k == 1 {
            vec!["y".to_string()]
        } else {
            (1..=k).map(|i| format!("y{i}")).collect()
        };
        Self::build_lambda_n_named(n, k, &base, &fiber)
    }

    /// Same construction with caller-chosen base and fiber coordinate names.
    pub fn build_lambda_n_named(
        n: usize,
        k: usize,
        base_names: &[String],
        fiber_names: &[String],
    ) -> Result<Self, SpaceError> {
        assert!(n >= 1 && k >= 1, "need at least one base and one fiber direction");
        assert_eq!(base_names.len(), n, "base names must match n");
        assert_eq!(fiber_names.len(), k, "fiber names must match k");
        let count = binomial(n + k, n);
        let dim = n + k + count;
        if count == usize::MAX || dim > MAX_DIM {
            return Err(SpaceError::TooLarge { n, k, dim });
        }

        let mut momenta: Vec<MomentumLabel> = (0..n + k)
            .combinations(n)
            .map(|combo| {
                let removed_base: Vec<usize> =
                    (0..n).filter(|m| !combo.contains(m)).map(|m| m + 1).collect();
                let fiber: Vec<usize> = combo
                    .iter()
                    .filter(|&&a| a >= n)
                    .map(|&a| a - n + 1)
                    .collect();
                let name = momentum_name(n, k, &removed_base, &fiber);
                MomentumLabel {
                    name,
                    removed_base,
                    fiber,
                }
            })
            .collect();
        momenta.sort_by(|a, b| {
            (a.fiber.len(), &a.removed_base, &a.fiber)
                .cmp(&(b.fiber.len(), &b.removed_base, &b.fiber))
        });

        let names: Vec<String> = base_names
            .iter()
            .chain(fiber_names.iter())
            .cloned()
            .chain(momenta.iter().map(|m| m.name.clone()))
            .collect();
        let chart = Chart::new(names);

        let base_refs: Vec<&str> = base_names.iter().map(|s| s.as_str()).collect();
        let volume = Form::wedge_of(&chart, &base_refs);
        let mut theta = Form::zero(&chart, n);
        for label in &momenta {
            let beta = basis_form(&chart, base_names, label, &volume);
            theta = theta.add(&beta.scale(&Expr::var(&label.name)));
        }
        let omega = theta.d();

        Ok(MultisymplecticSpace {
            chart,
            n,
            k,
            theta: Some(theta),
            omega,
            momenta,
            constraints: Vec::new(),
            nondeg: OnceLock::new(),
        })
    }

    /// Chart with every momentum carrying two or more fiber indices pinned
    /// to zero; `e` and the `p^μ_i` survive.
    pub fn ddw(n: usize, k: usize) -> Result<Self, SpaceError> {
        let full = Self::build_lambda_n(n, k)?;
        full.restrict(&full.ddw_constraints())
    }

    /// The first-jet momentum chart built directly: coordinates are the base
    /// and fiber names, `e`, and one `p{μ}_{i}` per base–fiber pair, with
    /// θ = e ω + Σ p{μ}_{i} dy^i ∧ ω_μ.  For charts small enough to
    /// construct both ways this agrees with [`MultisymplecticSpace::ddw`],
    /// but it never materializes the full n-form chart, so it stays
    /// available when `binom(n+k, n)` is far beyond [`MAX_DIM`].
    pub fn first_jet_dual(
        n: usize,
        base_names: &[String],
        fiber_names: &[String],
    ) -> Result<Self, SpaceError> {
        let k = fiber_names.len();
        assert!(n >= 1 && k >= 1, "need at least one base and one fiber direction");
        assert_eq!(base_names.len(), n, "base names must match n");
        let dim = n + k + 1 + n * k;
        if dim > MAX_DIM {
            return Err(SpaceError::TooLarge { n, k, dim });
        }

        let mut momenta = vec![MomentumLabel {
            name: momentum_name(n, k, &[], &[]),
            removed_base: Vec::new(),
            fiber: Vec::new(),
        }];
        for mu in 1..=n {
            for i in 1..=k {
                momenta.push(MomentumLabel {
                    name: momentum_name(n, k, &[mu], &[i]),
                    removed_base: vec![mu],
                    fiber: vec![i],
                });
            }
        }

        let names: Vec<String> = base_names
            .iter()
            .chain(fiber_names.iter())
            .cloned()
            .chain(momenta.iter().map(|m| m.name.clone()))
            .collect();
        let chart = Chart::new(names);

        let base_refs: Vec<&str> = base_names.iter().map(|s| s.as_str()).collect();
        let volume = Form::wedge_of(&chart, &base_refs);
        let mut theta = Form::zero(&chart, n);
        for label in &momenta {
            let beta = basis_form(&chart, base_names, label, &volume);
            theta = theta.add(&beta.scale(&Expr::var(&label.name)));
        }
        let omega = theta.d();

        Ok(MultisymplecticSpace {
            chart,
            n,
            k,
            theta: Some(theta),
            omega,
            momenta,
            constraints: Vec::new(),
            nondeg: OnceLock::new(),
        })
    }

    /// The constraint set that cuts this chart down to its first-jet piece:
    /// kill every momentum with at least two fiber indices.
    pub fn ddw_constraints(&self) -> Vec<Constraint> {
        self.momenta
            .iter()
            .filter(|m| m.fiber.len() >= 2)
            .map(|m| Constraint::Kill(m.name.clone()))
            .collect()
    }

    /// The 15-coordinate chart for a 1-form field on a 4-dimensional base:
    /// base `x1..x4`, fiber `a1..a4`, momenta `e` and the six antisymmetric
    /// components `p{μν}` (μ < ν) obtained by enforcing that the coefficient
    /// of `da_μ∧ω_ν` is opposite to that of `da_ν∧ω_μ`.
    pub fn maxwell4d() -> Result<Self, SpaceError> {
        let base: Vec<String> = (1..=4).map(|m| format!("x{m}")).collect();
        let fiber: Vec<String> = (1..=4).map(|m| format!("a{m}")).collect();
        let full = Self::build_lambda_n_named(4, 4, &base, &fiber)?;
        let ddw = full.restrict(&full.ddw_constraints())?;

        let mut constraints = Vec::new();
        for mu in 1..=4usize {
            constraints.push(Constraint::Kill(format!("p{mu}_{mu}")));
            for nu in mu + 1..=4 {
                // The surviving coordinate p{μν} is the coefficient of
                // da_μ ∧ ω_ν, held in the chart as p{ν}_{μ}.
                constraints.push(Constraint::Rename {
                    from: format!("p{nu}_{mu}"),
                    to: format!("p{mu}{nu}"),
                });
                constraints.push(Constraint::Identify {
                    kill: format!("p{mu}_{nu}"),
                    keep: format!("p{nu}_{mu}"),
                    sign: -1,
                });
            }
        }
        ddw.restrict(&constraints)
    }

    /// Apply momentum constraints, rebuilding the chart and both canonical
    /// forms by substitution.  An empty constraint set reproduces the space.
    pub fn restrict(&self, constraints: &[Constraint]) -> Result<Self, SpaceError> {
        #[derive(Clone, PartialEq)]
        enum State {
            Keep,
            Killed,
            Identified { keep: String, sign: i8 },
            Renamed(String),
        }

        let momentum_names: BTreeMap<&str, usize> = self
            .momenta
            .iter()
            .enumerate()
            .map(|(i, m)| (m.name.as_str(), i))
            .collect();
        let check_momentum = |name: &str| -> Result<(), SpaceError> {
            if self.chart.index(name).is_none() {
                Err(SpaceError::UnknownCoordinate(name.to_string()))
            } else if !momentum_names.contains_key(name) {
                Err(SpaceError::NotMomentum(name.to_string()))
            } else {
                Ok(())
            }
        };

        fn claim(
            states: &mut BTreeMap<String, State>,
            name: &str,
            state: State,
        ) -> Result<(), SpaceError> {
            match states.insert(name.to_string(), state) {
                None | Some(State::Keep) => Ok(()),
                Some(_) => Err(SpaceError::ConflictingConstraint(name.to_string())),
            }
        }

        let mut states: BTreeMap<String, State> = BTreeMap::new();
        for c in constraints {
            match c {
                Constraint::Kill(name) => {
                    check_momentum(name)?;
                    claim(&mut states, name, State::Killed)?;
                }
                Constraint::Identify { kill, keep, sign } => {
                    assert!(
                        *sign == 1 || *sign == -1,
                        "identification sign must be +1 or -1"
                    );
                    check_momentum(kill)?;
                    check_momentum(keep)?;
                    if kill == keep {
                        return Err(SpaceError::ConflictingConstraint(kill.clone()));
                    }
                    claim(
                        &mut states,
                        kill,
                        State::Identified {
                            keep: keep.clone(),
                            sign: *sign,
                        },
                    )?;
                    states.entry(keep.clone()).or_insert(State::Keep);
                }
                Constraint::Rename { from, to } => {
                    check_momentum(from)?;
                    let prior = states.insert(from.clone(), State::Renamed(to.clone()));
                    match prior {
                        None | Some(State::Keep) => {}
                        Some(other) => {
                            // Renaming the target of an identification is
                            // fine; renaming a dropped coordinate is not.
                            states.insert(from.clone(), other);
                            return Err(SpaceError::ConflictingConstraint(from.clone()));
                        }
                    }
                }
            }
        }
        // Identification targets must themselves survive.
        for state in states.values() {
            if let State::Identified { keep, .. } = state {
                match states.get(keep) {
                    None | Some(State::Keep) | Some(State::Renamed(_)) => {}
                    Some(_) => return Err(SpaceError::ConflictingConstraint(keep.clone())),
                }
            }
        }

        let final_name = |name: &str| -> String {
            match states.get(name) {
                Some(State::Renamed(to)) => to.clone(),
                _ => name.to_string(),
            }
        };

        // Survivors keep their chart order.
        let mut new_momenta = Vec::new();
        for label in &self.momenta {
            match states.get(&label.name) {
                Some(State::Killed) | Some(State::Identified { .. }) => {}
                _ => new_momenta.push(MomentumLabel {
                    name: final_name(&label.name),
                    removed_base: label.removed_base.clone(),
                    fiber: label.fiber.clone(),
                }),
            }
        }
        let mut new_names: Vec<String> = self.chart.names()[..self.n + self.k].to_vec();
        new_names.extend(new_momenta.iter().map(|m| m.name.clone()));
        let mut seen = std::collections::BTreeSet::new();
        for name in &new_names {
            if !seen.insert(name.clone()) {
                return Err(SpaceError::NameTaken(name.clone()));
            }
        }
        let new_chart = Chart::new(new_names);

        // Old coordinate index -> (new index, sign) or dropped.
        let mut index_map: Vec<Option<(usize, i8)>> = Vec::with_capacity(self.chart.dim());
        let mut subs: BTreeMap<String, Expr> = BTreeMap::new();
        for (i, name) in self.chart.names().iter().enumerate() {
            if i < self.n + self.k {
                index_map.push(Some((i, 1)));
                continue;
            }
            match states.get(name) {
                Some(State::Killed) => {
                    index_map.push(None);
                    subs.insert(name.clone(), Expr::zero());
                }
                Some(State::Identified { keep, sign }) => {
                    let target = final_name(keep);
                    let j = new_chart.expect_index(&target);
                    index_map.push(Some((j, *sign)));
                    let mut value = Expr::var(&target);
                    if *sign < 0 {
                        value = -value;
                    }
                    subs.insert(name.clone(), value);
                }
                Some(State::Renamed(to)) => {
                    let j = new_chart.expect_index(to);
                    index_map.push(Some((j, 1)));
                    subs.insert(name.clone(), Expr::var(to));
                }
                _ => {
                    let j = new_chart.expect_index(name);
                    index_map.push(Some((j, 1)));
                }
            }
        }

        let theta = self
            .theta
            .as_ref()
            .map(|t| push_form(t, &new_chart, &index_map, &subs));
        let omega = push_form(&self.omega, &new_chart, &index_map, &subs);

        let mut all_constraints = self.constraints.clone();
        all_constraints.extend(constraints.iter().cloned());

        Ok(MultisymplecticSpace {
            chart: new_chart,
            n: self.n,
            k: self.k,
            theta,
            omega,
            momenta: new_momenta,
            constraints: all_constraints,
            nondeg: OnceLock::new(),
        })
    }

    /// Kernel of `ξ ↦ ξ⌟Ω` over tangent vectors, memoized per space.
    pub fn nondegeneracy_check(&self) -> Nondegeneracy {
        self.nondeg.get_or_init(|| form_kernel(&self.omega)).clone()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegeneracy_check().is_nondegenerate()
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    /// Number of base directions (the canonical form has this degree).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of fiber directions of the underlying configuration bundle.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn theta(&self) -> Option<&Form> {
        self.theta.as_ref()
    }

    pub fn omega(&self) -> &Form {
        &self.omega
    }

    pub fn momenta(&self) -> &[MomentumLabel] {
        &self.momenta
    }

    pub fn momentum_label(&self, name: &str) -> Option<&MomentumLabel> {
        self.momenta.iter().find(|m| m.name == name)
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn base_names(&self) -> &[String] {
        &self.chart.names()[..self.n]
    }

    pub fn fiber_names(&self) -> &[String] {
        &self.chart.names()[self.n..self.n + self.k]
    }

    /// The base volume form dx¹∧…∧dxⁿ on this chart.
    pub fn base_volume(&self) -> Form {
        Form::from_terms(&self.chart, self.n, [((0..self.n).collect(), Expr::one())])
    }

    /// ∂_μ ⌟ ω for a 1-based base index μ.
    pub fn omega_mu(&self, mu: usize) -> Form {
        assert!(mu >= 1 && mu <= self.n, "base index out of range");
        let v = Multivector::from_terms(&self.chart, 1, [(vec![mu - 1], Expr::one())]);
        contract_form(&v, &self.base_volume())
    }

    /// The momentum conjugate to the base volume, customarily `e`.
    pub fn energy_name(&self) -> Option<&str> {
        self.momenta
            .iter()
            .find(|m| m.fiber.is_empty())
            .map(|m| m.name.as_str())
    }
}

/// The basis n-form `dy^F ∧ (∂_R ⌟ ω)` a momentum coordinate multiplies.
fn basis_form(
    chart: &Arc<Chart>,
    base_names: &[String],
    label: &MomentumLabel,
    volume: &Form,
) -> Form {
    let n = base_names.len();
    let contracted = if label.removed_base.is_empty() {
        volume.clone()
    } else {
        let removed: Vec<&str> = label
            .removed_base
            .iter()
            .map(|&m| base_names[m - 1].as_str())
            .collect();
        contract_form(&Multivector::wedge_of(chart, &removed), volume)
    };
    if label.fiber.is_empty() {
        return contracted;
    }
    let fiber_idx: Vec<usize> = label.fiber.iter().map(|&i| n + i - 1).collect();
    let fiber_part = Form::from_terms(chart, fiber_idx.len(), [(fiber_idx, Expr::one())]);
    fiber_part.wedge(&contracted)
}

/// Push a form through a chart surjection: remap surviving coordinate
/// differentials (with signs), drop killed ones, substitute coefficients.
fn push_form(
    form: &Form,
    new_chart: &Arc<Chart>,
    index_map: &[Option<(usize, i8)>],
    subs: &BTreeMap<String, Expr>,
) -> Form {
    let mut entries: Vec<(Vec<usize>, Expr)> = Vec::new();
    'terms: for (idx, coeff) in form.iter() {
        let mut tuple = Vec::with_capacity(idx.len());
        let mut sign = 1i8;
        for &i in idx {
            match index_map[i] {
                None => continue 'terms,
                Some((j, s)) => {
                    tuple.push(j);
                    sign *= s;
                }
            }
        }
        let mut value = coeff.subst_many(subs);
        if sign < 0 {
            value = -value;
        }
        entries.push((tuple, value));
    }
    Form::from_terms(new_chart, form.degree(), entries)
}
