//! Pinned charts and canonical forms for the standard constructions.

use exterior::{contract_form, Form, Multivector};
use multisympl::{Constraint, MultisymplecticSpace, Nondegeneracy, SpaceError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symcore::Expr;

fn v(name: &str) -> Expr {
    Expr::var(name)
}

#[test]
fn two_by_two_chart_names_and_theta() {
    let space = MultisymplecticSpace::build_lambda_n(2, 2).unwrap();
    let names: Vec<&str> = space.chart().names().iter().map(|s| s.as_str()).collect();
    assert_eq!(
        names,
        ["x1", "x2", "y1", "y2", "e", "p1_1", "p1_2", "p2_1", "p2_2", "r"]
    );

    // θ = e dx¹∧dx² + p¹_i dy^i∧dx² + p²_i dx¹∧dy^i + r dy¹∧dy²
    let ch = space.chart();
    let expected = Form::wedge_of(ch, &["x1", "x2"])
        .scale(&v("e"))
        .add(&Form::wedge_of(ch, &["y1", "x2"]).scale(&v("p1_1")))
        .add(&Form::wedge_of(ch, &["y2", "x2"]).scale(&v("p1_2")))
        .add(&Form::wedge_of(ch, &["x1", "y1"]).scale(&v("p2_1")))
        .add(&Form::wedge_of(ch, &["x1", "y2"]).scale(&v("p2_2")))
        .add(&Form::wedge_of(ch, &["y1", "y2"]).scale(&v("r")));
    assert_eq!(space.theta().unwrap(), &expected);
    assert_eq!(space.omega(), &expected.d());
}

#[test]
fn dimension_formula_matches_the_chart() {
    let binomial = |n: usize, r: usize| -> usize {
        (0..r.min(n - r)).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
    };
    for (n, k) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let space = MultisymplecticSpace::build_lambda_n(n, k).unwrap();
        let expected = n + k + binomial(n + k, n);
        assert_eq!(space.chart().dim(), expected, "dimension for n={n}, k={k}");
        assert_eq!(space.momenta().len(), binomial(n + k, n));
    }
}

#[test]
fn canonical_symplectic_chart_when_n_and_k_are_one() {
    let space = MultisymplecticSpace::build_lambda_n(1, 1).unwrap();
    let names: Vec<&str> = space.chart().names().iter().map(|s| s.as_str()).collect();
    assert_eq!(names, ["t", "y", "e", "p"]);

    // θ = e dt + p dy, Ω = de∧dt + dp∧dy
    let ch = space.chart();
    let theta = Form::coordinate(ch, "t")
        .scale(&v("e"))
        .add(&Form::coordinate(ch, "y").scale(&v("p")));
    assert_eq!(space.theta().unwrap(), &theta);
    let omega = Form::wedge_of(ch, &["e", "t"]).add(&Form::wedge_of(ch, &["p", "y"]));
    assert_eq!(space.omega(), &omega);
    assert!(space.is_nondegenerate());
}

#[test]
fn momentum_aliases_on_mixed_charts() {
    let space = MultisymplecticSpace::build_lambda_n(3, 2).unwrap();
    for name in ["e", "p1_1", "p3_2", "p12_12", "p13_12", "p23_12"] {
        assert!(space.chart().index(name).is_some(), "missing {name}");
    }
    let space = MultisymplecticSpace::build_lambda_n(2, 3).unwrap();
    for name in ["e", "p2_3", "p12_12", "p12_13", "p12_23"] {
        assert!(space.chart().index(name).is_some(), "missing {name}");
    }
    let space = MultisymplecticSpace::build_lambda_n(1, 3).unwrap();
    let names: Vec<&str> = space.chart().names().iter().map(|s| s.as_str()).collect();
    assert_eq!(names, ["t", "y1", "y2", "y3", "e", "p1_1", "p1_2", "p1_3"]);
}

#[test]
fn ddw_restriction_of_the_two_by_two_chart() {
    let full = MultisymplecticSpace::build_lambda_n(2, 2).unwrap();
    let ddw = full.restrict(&[Constraint::Kill("r".to_string())]).unwrap();
    let names: Vec<&str> = ddw.chart().names().iter().map(|s| s.as_str()).collect();
    assert_eq!(
        names,
        ["x1", "x2", "y1", "y2", "e", "p1_1", "p1_2", "p2_1", "p2_2"]
    );

    // Ω^{dDW} = de∧ω + Σ_{μ,i} dp^μ_i ∧ dy^i ∧ ω_μ
    let ch = ddw.chart();
    let omega_base = Form::wedge_of(ch, &["x1", "x2"]);
    let mut expected = Form::coordinate(ch, "e").wedge(&omega_base);
    for mu in 1..=2usize {
        let omega_mu = contract_form(
            &Multivector::coordinate(ch, &format!("x{mu}")),
            &omega_base,
        );
        for i in 1..=2usize {
            let dp = Form::coordinate(ch, &format!("p{mu}_{i}"));
            let dy = Form::coordinate(ch, &format!("y{i}"));
            expected = expected.add(&dp.wedge(&dy).wedge(&omega_mu));
        }
    }
    assert_eq!(ddw.omega(), &expected);

    // The convenience constructor is the same restriction.
    let direct = MultisymplecticSpace::ddw(2, 2).unwrap();
    assert_eq!(direct.chart().names(), ddw.chart().names());
    assert_eq!(direct.theta(), ddw.theta());
    assert_eq!(direct.omega(), ddw.omega());
    assert!(ddw.is_nondegenerate());
}

#[test]
fn maxwell_restriction_has_six_antisymmetric_momenta() {
    let space = MultisymplecticSpace::maxwell4d().unwrap();
    assert_eq!(space.chart().dim(), 15);
    let momentum_names: Vec<&str> = space.momenta().iter().map(|m| m.name.as_str()).collect();
    assert_eq!(
        momentum_names,
        ["e", "p12", "p13", "p23", "p14", "p24", "p34"]
    );

    // Ω = de∧ω + dπ∧da with π = −½ p^{μν} ω_{μν} and a = a_μ dx^μ,
    // where p^{νμ} means −p^{μν} for μ < ν.
    let ch = space.chart();
    let omega_base = Form::wedge_of(ch, &["x1", "x2", "x3", "x4"]);
    let p_signed = |mu: usize, nu: usize| -> Expr {
        if mu < nu {
            v(&format!("p{mu}{nu}"))
        } else {
            -v(&format!("p{nu}{mu}"))
        }
    };
    let mut pi = Form::zero(ch, 2);
    for mu in 1..=4usize {
        for nu in 1..=4usize {
            if mu == nu {
                continue;
            }
            let omega_mu_nu = contract_form(
                &Multivector::wedge_of(ch, &[&format!("x{mu}"), &format!("x{nu}")]),
                &omega_base,
            );
            pi = pi.add(&omega_mu_nu.scale(&(Expr::rat(-1, 2) * p_signed(mu, nu))));
        }
    }
    let mut a = Form::zero(ch, 1);
    for mu in 1..=4usize {
        a = a.add(&Form::coordinate(ch, &format!("x{mu}")).scale(&v(&format!("a{mu}"))));
    }
    let expected = Form::coordinate(ch, "e")
        .wedge(&omega_base)
        .add(&pi.d().wedge(&a.d()));
    assert_eq!(space.omega(), &expected);

    // dπ∧da = Σ_{μ≠ν} dp^{μν} ∧ da_μ ∧ ω_ν
    let mut sum = Form::zero(ch, 5);
    for mu in 1..=4usize {
        for nu in 1..=4usize {
            if mu == nu {
                continue;
            }
            let dp = if mu < nu {
                Form::coordinate(ch, &format!("p{mu}{nu}"))
            } else {
                Form::coordinate(ch, &format!("p{nu}{mu}")).neg()
            };
            let da = Form::coordinate(ch, &format!("a{mu}"));
            let omega_nu = contract_form(
                &Multivector::coordinate(ch, &format!("x{nu}")),
                &omega_base,
            );
            sum = sum.add(&dp.wedge(&da).wedge(&omega_nu));
        }
    }
    assert_eq!(pi.d().wedge(&a.d()), sum);
    assert!(space.is_nondegenerate());
}

#[test]
fn five_coordinate_chart_with_only_the_volume_momentum_is_degenerate() {
    let full = MultisymplecticSpace::build_lambda_n(2, 2).unwrap();
    let kills: Vec<Constraint> = ["p1_1", "p1_2", "p2_1", "p2_2", "r"]
        .iter()
        .map(|name| Constraint::Kill(name.to_string()))
        .collect();
    let space = full.restrict(&kills).unwrap();
    let names: Vec<&str> = space.chart().names().iter().map(|s| s.as_str()).collect();
    assert_eq!(names, ["x1", "x2", "y1", "y2", "e"]);

    // Ω = de∧dx¹∧dx², annihilated by both fiber directions.
    let ch = space.chart();
    assert_eq!(space.omega(), &Form::wedge_of(ch, &["e", "x1", "x2"]));
    for name in ["y1", "y2"] {
        let xi = Multivector::coordinate(ch, name);
        assert!(contract_form(&xi, space.omega()).is_zero());
    }
    match space.nondegeneracy_check() {
        Nondegeneracy::Degenerate { kernel, .. } => {
            assert_eq!(kernel.len(), 2);
            for vfield in &kernel {
                assert!(contract_form(vfield, space.omega()).is_zero());
            }
        }
        Nondegeneracy::Nondegenerate => panic!("expected a degenerate verdict"),
    }
    assert!(!space.is_nondegenerate());
}

#[test]
fn full_two_by_two_chart_is_nondegenerate() {
    let space = MultisymplecticSpace::build_lambda_n(2, 2).unwrap();

    // Independent cross-check before trusting the kernel computation:
    // random nonzero constant vectors never annihilate Ω.
    let ch = space.chart();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2211);
    for _ in 0..20 {
        let mut xi = Multivector::zero(ch, 1);
        let mut nonzero = false;
        for i in 0..ch.dim() {
            let c: i64 = rng.gen_range(-5..=5);
            if c != 0 {
                nonzero = true;
                xi = xi.add(&Multivector::from_terms(ch, 1, [(vec![i], Expr::int(c))]));
            }
        }
        if !nonzero {
            continue;
        }
        assert!(
            !contract_form(&xi, space.omega()).is_zero(),
            "nonzero vector in the kernel: {xi}"
        );
    }

    assert!(space.is_nondegenerate());
}

#[test]
fn empty_constraint_set_reproduces_the_space() {
    let space = MultisymplecticSpace::build_lambda_n(2, 2).unwrap();
    let same = space.restrict(&[]).unwrap();
    assert_eq!(same.chart().names(), space.chart().names());
    assert_eq!(same.theta(), space.theta());
    assert_eq!(same.omega(), space.omega());
}

#[test]
fn restriction_rejects_bad_constraint_sets() {
    let space = MultisymplecticSpace::build_lambda_n(2, 2).unwrap();
    let kill = |name: &str| Constraint::Kill(name.to_string());

    assert_eq!(
        space.restrict(&[kill("qq")]).unwrap_err(),
        SpaceError::UnknownCoordinate("qq".to_string())
    );
    assert_eq!(
        space.restrict(&[kill("x1")]).unwrap_err(),
        SpaceError::NotMomentum("x1".to_string())
    );
    assert_eq!(
        space
            .restrict(&[Constraint::Rename {
                from: "r".to_string(),
                to: "e".to_string(),
            }])
            .unwrap_err(),
        SpaceError::NameTaken("e".to_string())
    );
    assert_eq!(
        space
            .restrict(&[
                kill("r"),
                Constraint::Rename {
                    from: "r".to_string(),
                    to: "s".to_string(),
                }
            ])
            .unwrap_err(),
        SpaceError::ConflictingConstraint("r".to_string())
    );
    assert_eq!(
        space
            .restrict(&[
                Constraint::Identify {
                    kill: "p1_1".to_string(),
                    keep: "r".to_string(),
                    sign: 1,
                },
                kill("r"),
            ])
            .unwrap_err(),
        SpaceError::ConflictingConstraint("r".to_string())
    );
}

#[test]
fn first_jet_chart_for_a_large_fiber() {
    // Four base and fifteen fiber directions: the full momentum chart would
    // have binom(19, 4) = 3876 momenta, but the first-jet chart only carries
    // the energy and one momentum per base-fiber pair.
    let base: Vec<String> = (1..=4).map(|i| format!("x{i}")).collect();
    let fiber: Vec<String> = (1..=15).map(|i| format!("y{i}")).collect();
    let space = MultisymplecticSpace::first_jet_dual(4, &base, &fiber).unwrap();
    assert_eq!(space.chart().names().len(), 4 + 15 + 1 + 60);
    assert_eq!(space.momenta().len(), 61);
    let theta = space.theta().expect("first-jet chart carries theta");
    assert_eq!(theta.iter().count(), 61);
    assert_eq!(&theta.d(), space.omega());
    assert!(space.omega().d().is_zero());
    assert_eq!(space.energy_name(), Some("e"));
}
