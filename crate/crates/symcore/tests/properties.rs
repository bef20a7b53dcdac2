//! Property tests for the canonical form: field laws hold structurally,
//! differentiation satisfies its algebraic identities, parsing inverts
//! display, and linear solving produces exact solutions.

use proptest::prelude::*;
use symcore::{parse_expr, solve_linear, Expr};

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        3 => (-3i64..=3).prop_map(Expr::int),
        3 => prop_oneof![Just("x"), Just("y"), Just("z")].prop_map(Expr::var),
        1 => Just(Expr::app("U", vec![Expr::var("x"), Expr::var("y")])),
    ]
}

/// Small expression trees over x, y, z and a formal U(x, y), with guarded
/// division so every generated value is a well-formed rational function.
fn expr_any() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(3, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            (inner.clone(), inner).prop_map(|(a, b)| if b.is_zero() { a } else { a / b }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn addition_commutes(a in expr_any(), b in expr_any()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_commutes(a in expr_any(), b in expr_any()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn addition_associates(a in expr_any(), b in expr_any(), c in expr_any()) {
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_distributes(a in expr_any(), b in expr_any(), c in expr_any()) {
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn subtracting_self_gives_structural_zero(a in expr_any()) {
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_inverts_multiplication(a in expr_any(), b in expr_any()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a / &b) * &b, a.clone());
        prop_assert_eq!(&(&a * &b) / &b, a);
    }

    #[test]
    fn mixed_partials_commute(a in expr_any()) {
        prop_assert_eq!(a.diff("x").diff("y"), a.diff("y").diff("x"));
    }

    #[test]
    fn derivative_is_a_leibniz_rule(a in expr_any(), b in expr_any()) {
        let lhs = (&a * &b).diff("x");
        let rhs = &a.diff("x") * &b + &a * &b.diff("x");
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_of_quotient(a in expr_any(), b in expr_any()) {
        prop_assume!(!b.is_zero());
        let q = &a / &b;
        let rhs = &(&a.diff("x") * &b - &a * &b.diff("x")) / &(&b * &b);
        prop_assert_eq!(q.diff("x"), rhs);
    }

    #[test]
    fn display_then_parse_is_identity(a in expr_any()) {
        let rendered = format!("{a}");
        let reparsed = parse_expr(&rendered).unwrap();
        prop_assert_eq!(reparsed, a);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in expr_any(), b in expr_any()) {
        let v = Expr::var("y") + Expr::int(1);
        let subst_sum = (&a + &b).subst("x", &v);
        prop_assert_eq!(subst_sum, a.subst("x", &v) + b.subst("x", &v));
        let subst_prod = (&a * &b).subst("x", &v);
        prop_assert_eq!(subst_prod, a.subst("x", &v) * b.subst("x", &v));
    }

    #[test]
    fn solve_recovers_constructed_solutions(
        rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 2),
        point in proptest::collection::vec(-3i64..=3, 3),
    ) {
        // Two equations in three unknowns with the right-hand side taken
        // from a known point, so the system is consistent by construction.
        let names = ["u0", "u1", "u2"];
        let eqs: Vec<Expr> = rows.iter().map(|row| {
            let mut e = Expr::zero();
            for (c, n) in row.iter().zip(names) {
                e = e + Expr::int(*c) * Expr::var(n);
            }
            let rhs: i64 = row.iter().zip(&point).map(|(c, x)| c * x).sum();
            e - Expr::int(rhs)
        }).collect();
        let sol = solve_linear(&eqs, &names).unwrap();
        // The general solution substitutes to an identical zero, with the
        // kernel coefficients left as formal parameters.
        let ts: Vec<Expr> = (0..sol.kernel.len())
            .map(|i| Expr::var(format!("t{i}")))
            .collect();
        let general = sol.with_kernel_coeffs(&ts);
        for eq in &eqs {
            let mut g = eq.clone();
            for (n, v) in names.iter().zip(&general) {
                g = g.subst(n, v);
            }
            prop_assert!(g.is_zero(), "residual {}", g);
        }
    }
}
