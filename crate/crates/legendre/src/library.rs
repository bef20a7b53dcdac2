//! The shipped model library.
//!
//! Eight named first-order variational problems, each paired with the
//! momentum chart its Hamiltonian is classically computed on. The names
//! are stable and addressable from the command line.

use symcore::Expr;

use multisympl::Constraint;

use crate::error::LegendreError;
use crate::spec::{LagrangianSpec, Target};
use crate::transform::{hamiltonian, LegendreResult};

/// A named problem plus the chart family its transform runs on.
#[derive(Clone, Debug)]
pub struct NamedExample {
    pub name: &'static str,
    pub summary: &'static str,
    pub spec: LagrangianSpec,
    pub target: Target,
}

/// Stable names of the shipped models, in presentation order.
pub const EXAMPLE_NAMES: [&str; 8] = [
    "trivial2x2",
    "dirichlet2x2",
    "maxwell2d",
    "maxwell4d",
    "ymh",
    "cscalar",
    "cscalar_gauged",
    "point_mech",
];

fn vel(i: usize, mu: usize) -> Expr {
    Expr::var(&format!("v{i}_{mu}"))
}

fn var(name: &str) -> Expr {
    Expr::var(name)
}

fn eps3(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// Two scalar fields over a two-dimensional base with no Lagrangian at
/// all: the transform on the full chart exists wherever the top momentum
/// r is nonzero.
pub fn trivial2x2() -> LagrangianSpec {
    LagrangianSpec::new(&["x1", "x2"], &["y1", "y2"], Expr::zero(), &[1, 1], &[])
        .expect("shipped model is well formed")
}

/// The Dirichlet energy of a map from the Euclidean plane to the plane.
pub fn dirichlet2x2() -> LagrangianSpec {
    let mut l = Expr::zero();
    for i in 1..=2 {
        for mu in 1..=2 {
            let v = vel(i, mu);
            l = l + &(&v * &v) * &Expr::rat(1, 2);
        }
    }
    LagrangianSpec::new(&["x1", "x2"], &["y1", "y2"], l, &[1, 1], &[])
        .expect("shipped model is well formed")
}

/// Electromagnetism over a two-dimensional base: the Lagrangian sees only
/// the curl of the field pair, so the de Donder–Weyl chart is degenerate
/// while the full chart carries the Hamiltonian wherever r ∉ {0, −2}.
pub fn maxwell2d() -> LagrangianSpec {
    let curl = &vel(1, 2) - &vel(2, 1);
    let l = &(&curl * &curl) * &Expr::rat(-1, 2);
    LagrangianSpec::new(&["x1", "x2"], &["y1", "y2"], l, &[1, 1], &[])
        .expect("shipped model is well formed")
}

/// The antisymmetrization constraints for a 1-form field: per base pair
/// μ < ν kill the diagonal momenta, keep the coefficient of da_μ∧ω_ν under
/// the name `p{μν}`, and identify the coefficient of da_ν∧ω_μ with its
/// negative. `fiber_of(μ)` maps the base index to the fiber position of
/// the corresponding field component.
fn one_form_constraints(
    n: usize,
    fiber_of: impl Fn(usize) -> usize,
    name_of: impl Fn(usize, usize) -> String,
) -> Vec<Constraint> {
    let mut constraints = Vec::new();
    for mu in 1..=n {
        constraints.push(Constraint::Kill(format!("p{mu}_{f}", f = fiber_of(mu))));
        for nu in mu + 1..=n {
            constraints.push(Constraint::Rename {
                from: format!("p{nu}_{f}", f = fiber_of(mu)),
                to: name_of(mu, nu),
            });
            constraints.push(Constraint::Identify {
                kill: format!("p{mu}_{f}", f = fiber_of(nu)),
                keep: format!("p{nu}_{f}", f = fiber_of(mu)),
                sign: -1,
            });
        }
    }
    constraints
}

/// Electromagnetism on four-dimensional Minkowski space with an external
/// current, on the antisymmetrized de Donder–Weyl chart.
pub fn maxwell4d() -> LagrangianSpec {
    let eta = [1i64, -1, -1, -1];
    let mut l = Expr::zero();
    for mu in 1..=4usize {
        for nu in 1..=4usize {
            if mu == nu {
                continue;
            }
            let f = &vel(nu, mu) - &vel(mu, nu);
            l = l + &(&f * &f) * &Expr::rat(-eta[mu - 1] * eta[nu - 1], 4);
        }
    }
    let x: Vec<Expr> = (1..=4).map(|m| var(&format!("x{m}"))).collect();
    for mu in 1..=4usize {
        let j = Expr::app(format!("j{mu}"), x.clone());
        l = l - &j * &var(&format!("a{mu}"));
    }
    LagrangianSpec::new(
        &["x1", "x2", "x3", "x4"],
        &["a1", "a2", "a3", "a4"],
        l,
        &eta,
        &[],
    )
    .expect("shipped model is well formed")
    .with_ddw_constraints(one_form_constraints(4, |mu| mu, |mu, nu| format!("p{mu}{nu}")))
}

/// Fiber position of the connection component a^I_μ in the Yang–Mills–Higgs
/// chart: the three Higgs components come first.
fn ymh_fiber(cap_i: usize, mu: usize) -> usize {
    3 + (cap_i - 1) * 4 + mu
}

/// An su(2) Yang–Mills field coupled to a Higgs triplet over Minkowski
/// space, on the antisymmetrized de Donder–Weyl chart. The potential is an
/// uninterpreted function of |φ|²/2.
pub fn ymh() -> LagrangianSpec {
    let eta = [1i64, -1, -1, -1];
    let base: Vec<String> = (1..=4).map(|m| format!("x{m}")).collect();
    let mut fiber: Vec<String> = (1..=3).map(|i| format!("phi{i}")).collect();
    for cap_i in 1..=3 {
        for mu in 1..=4 {
            fiber.push(format!("a{cap_i}_{mu}"));
        }
    }

    // Curvature: F^I_{μν} = ∂_μ a^I_ν − ∂_ν a^I_μ + Σ ε_{IJK} a^J_μ a^K_ν.
    let curvature = |cap_i: usize, mu: usize, nu: usize| -> Expr {
        let mut f = &vel(ymh_fiber(cap_i, nu), mu) - &vel(ymh_fiber(cap_i, mu), nu);
        for cap_j in 1..=3 {
            for cap_k in 1..=3 {
                let s = eps3(cap_i, cap_j, cap_k);
                if s == 0 {
                    continue;
                }
                let prod = &var(&format!("a{cap_j}_{mu}")) * &var(&format!("a{cap_k}_{nu}"));
                f = f + &prod * &Expr::int(s);
            }
        }
        f
    };
    // Covariant derivative: ∇_μ φ^i = ∂_μ φ^i + Σ ε_{iJk} a^J_μ φ^k.
    let covariant = |i: usize, mu: usize| -> Expr {
        let mut d = vel(i, mu);
        for cap_j in 1..=3 {
            for k in 1..=3 {
                let s = eps3(i, cap_j, k);
                if s == 0 {
                    continue;
                }
                let prod = &var(&format!("a{cap_j}_{mu}")) * &var(&format!("phi{k}"));
                d = d + &prod * &Expr::int(s);
            }
        }
        d
    };

    let mut l = Expr::zero();
    for cap_i in 1..=3 {
        for mu in 1..=4usize {
            for nu in 1..=4usize {
                if mu == nu {
                    continue;
                }
                let f = curvature(cap_i, mu, nu);
                l = l + &(&f * &f) * &Expr::rat(-eta[mu - 1] * eta[nu - 1], 4);
            }
        }
    }
    for i in 1..=3 {
        for mu in 1..=4usize {
            let d = covariant(i, mu);
            l = l + &(&d * &d) * &Expr::rat(eta[mu - 1], 2);
        }
    }
    let phi_sq = (1..=3).fold(Expr::zero(), |acc, i| {
        let p = var(&format!("phi{i}"));
        acc + &(&p * &p) * &Expr::rat(1, 2)
    });
    l = l + Expr::app("V", vec![phi_sq]);

    let base_refs: Vec<&str> = base.iter().map(|s| s.as_str()).collect();
    let fiber_refs: Vec<&str> = fiber.iter().map(|s| s.as_str()).collect();
    let mut constraints = Vec::new();
    for cap_i in 1..=3 {
        constraints.extend(one_form_constraints(
            4,
            |mu| ymh_fiber(cap_i, mu),
            |mu, nu| format!("pi{mu}{nu}_{cap_i}"),
        ));
    }
    LagrangianSpec::new(&base_refs, &fiber_refs, l, &eta, &[])
        .expect("shipped model is well formed")
        .with_ddw_constraints(constraints)
}

/// A free complex scalar field on two-dimensional Minkowski space, with an
/// uninterpreted potential of |φ|²/2, on the plain de Donder–Weyl chart.
pub fn cscalar() -> LagrangianSpec {
    let eta = [1i64, -1];
    let mut l = Expr::zero();
    for a in 1..=2 {
        for mu in 1..=2usize {
            let v = vel(a, mu);
            l = l + &(&v * &v) * &Expr::rat(eta[mu - 1], 2);
        }
    }
    let phi_sq = (1..=2).fold(Expr::zero(), |acc, i| {
        let p = var(&format!("phi{i}"));
        acc + &(&p * &p) * &Expr::rat(1, 2)
    });
    l = l + Expr::app("V", vec![phi_sq]);
    LagrangianSpec::new(&["x1", "x2"], &["phi1", "phi2"], l, &eta, &[])
        .expect("shipped model is well formed")
}

/// The complex scalar minimally coupled to an abelian connection, on the
/// antisymmetrized de Donder–Weyl chart. Fibers are the two real field
/// components and the two connection components.
pub fn cscalar_gauged() -> LagrangianSpec {
    let eta = [1i64, -1];
    // D_μ φ = (∂_μ φ¹ − a_μ φ²) + i(∂_μ φ² + a_μ φ¹); fibers 3, 4 hold a.
    let d_re = |mu: usize| &vel(1, mu) - &(&var(&format!("a{mu}")) * &var("phi2"));
    let d_im = |mu: usize| &vel(2, mu) + &(&var(&format!("a{mu}")) * &var("phi1"));
    let mut l = Expr::zero();
    for mu in 1..=2usize {
        let re = d_re(mu);
        let im = d_im(mu);
        l = l + &(&(&re * &re) + &(&im * &im)) * &Expr::rat(eta[mu - 1], 2);
    }
    for mu in 1..=2usize {
        for nu in 1..=2usize {
            if mu == nu {
                continue;
            }
            let f = &vel(2 + nu, mu) - &vel(2 + mu, nu);
            l = l + &(&f * &f) * &Expr::rat(-eta[mu - 1] * eta[nu - 1], 4);
        }
    }
    let phi_sq = (1..=2).fold(Expr::zero(), |acc, i| {
        let p = var(&format!("phi{i}"));
        acc + &(&p * &p) * &Expr::rat(1, 2)
    });
    l = l + Expr::app("V", vec![phi_sq]);
    LagrangianSpec::new(&["x1", "x2"], &["phi1", "phi2", "a1", "a2"], l, &eta, &[])
        .expect("shipped model is well formed")
        .with_ddw_constraints(one_form_constraints(2, |mu| 2 + mu, |mu, nu| format!("p{mu}{nu}")))
}

/// The harmonic oscillator as a field theory over a one-dimensional base.
pub fn point_mech() -> LagrangianSpec {
    let v = var("v");
    let q = var("q");
    let l = &(&(&v * &v) - &(&q * &q)) * &Expr::rat(1, 2);
    LagrangianSpec::new(&["t"], &["q"], l, &[1], &[]).expect("shipped model is well formed")
}

/// Every shipped model with its chart family.
pub fn examples() -> Vec<NamedExample> {
    vec![
        NamedExample {
            name: "trivial2x2",
            summary: "two plane fields, zero Lagrangian, full momentum chart",
            spec: trivial2x2(),
            target: Target::Full,
        },
        NamedExample {
            name: "dirichlet2x2",
            summary: "Dirichlet energy of a plane map, full momentum chart",
            spec: dirichlet2x2(),
            target: Target::Full,
        },
        NamedExample {
            name: "maxwell2d",
            summary: "two-dimensional electromagnetism, full momentum chart",
            spec: maxwell2d(),
            target: Target::Full,
        },
        NamedExample {
            name: "maxwell4d",
            summary: "Minkowski electromagnetism with a source, antisymmetrized first-jet chart",
            spec: maxwell4d(),
            target: Target::DeDonderWeyl,
        },
        NamedExample {
            name: "ymh",
            summary: "su(2) Yang–Mills with a Higgs triplet, antisymmetrized first-jet chart",
            spec: ymh(),
            target: Target::DeDonderWeyl,
        },
        NamedExample {
            name: "cscalar",
            summary: "free complex scalar on a Minkowski strip, first-jet chart",
            spec: cscalar(),
            target: Target::DeDonderWeyl,
        },
        NamedExample {
            name: "cscalar_gauged",
            summary: "complex scalar coupled to an abelian connection, antisymmetrized first-jet chart",
            spec: cscalar_gauged(),
            target: Target::DeDonderWeyl,
        },
        NamedExample {
            name: "point_mech",
            summary: "harmonic oscillator as a one-dimensional field theory",
            spec: point_mech(),
            target: Target::DeDonderWeyl,
        },
    ]
}

/// Look one model up by its stable name.
pub fn example(name: &str) -> Option<NamedExample> {
    examples().into_iter().find(|e| e.name == name)
}

/// The classical first-jet results: every shipped model whose chart family
/// is de Donder–Weyl, transformed.
pub fn ddw_library() -> Result<Vec<(&'static str, LegendreResult)>, LegendreError> {
    examples()
        .into_iter()
        .filter(|e| e.target == Target::DeDonderWeyl)
        .map(|e| hamiltonian(&e.spec, e.target).map(|r| (e.name, r)))
        .collect()
}
