//! The defining adjunctions and graded identities as property tests over
//! random forms and multivectors with symbolic coefficients.

use std::sync::Arc;

use exterior::{
    contract_form, contract_vector, decomposable_from_vectors, factor_decomposable, lie_bracket,
    pair, Chart, Form, Multivector,
};
use itertools::Itertools;
use proptest::prelude::*;
use symcore::Expr;

const DIM: usize = 5;

fn chart() -> Arc<Chart> {
    Chart::new((1..=DIM).map(|i| format!("q{i}")))
}

fn coeff() -> impl Strategy<Value = Expr> {
    prop_oneof![
        3 => (-3i64..=3).prop_map(Expr::int),
        2 => (0..DIM, -2i64..=2)
            .prop_map(|(i, c)| Expr::var(format!("q{}", i + 1)) * Expr::int(c)),
        1 => (0..DIM, 0..DIM).prop_map(|(i, j)| {
            Expr::var(format!("q{}", i + 1)) * Expr::var(format!("q{}", j + 1))
        }),
    ]
}

fn form(degree: usize) -> impl Strategy<Value = Form> {
    let keys: Vec<Vec<usize>> = (0..DIM).combinations(degree).collect();
    let len = keys.len();
    proptest::collection::vec(coeff(), len).prop_map(move |cs| {
        Form::from_terms(&chart(), degree, keys.iter().cloned().zip(cs))
    })
}

fn multivector(degree: usize) -> impl Strategy<Value = Multivector> {
    let keys: Vec<Vec<usize>> = (0..DIM).combinations(degree).collect();
    let len = keys.len();
    proptest::collection::vec(coeff(), len).prop_map(move |cs| {
        Multivector::from_terms(&chart(), degree, keys.iter().cloned().zip(cs))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // pair(Y, X ⌟ w) = pair(X ∧ Y, w): the adjunction defining contract_form.
    #[test]
    fn left_contraction_adjunction_1_2(x in multivector(1), y in multivector(1), w in form(2)) {
        prop_assert_eq!(pair(&y, &contract_form(&x, &w)), pair(&x.wedge(&y), &w));
    }

    #[test]
    fn left_contraction_adjunction_1_3(x in multivector(1), y in multivector(2), w in form(3)) {
        prop_assert_eq!(pair(&y, &contract_form(&x, &w)), pair(&x.wedge(&y), &w));
    }

    #[test]
    fn left_contraction_adjunction_2_3(x in multivector(2), y in multivector(1), w in form(3)) {
        prop_assert_eq!(pair(&y, &contract_form(&x, &w)), pair(&x.wedge(&y), &w));
    }

    // pair(X ⌞ w, v) = pair(X, w ∧ v): the adjunction defining contract_vector.
    #[test]
    fn right_contraction_adjunction_2_1(x in multivector(2), w in form(1), v in form(1)) {
        prop_assert_eq!(pair(&contract_vector(&x, &w), &v), pair(&x, &w.wedge(&v)));
    }

    #[test]
    fn right_contraction_adjunction_3_1(x in multivector(3), w in form(1), v in form(2)) {
        prop_assert_eq!(pair(&contract_vector(&x, &w), &v), pair(&x, &w.wedge(&v)));
    }

    #[test]
    fn right_contraction_adjunction_3_2(x in multivector(3), w in form(2), v in form(1)) {
        prop_assert_eq!(pair(&contract_vector(&x, &w), &v), pair(&x, &w.wedge(&v)));
    }

    // Iterated left contraction composes through the wedge.
    #[test]
    fn left_contraction_composes(x in multivector(1), y in multivector(1), w in form(3)) {
        let lhs = contract_form(&x, &contract_form(&y, &w));
        let rhs = contract_form(&y.wedge(&x), &w);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exterior_derivative_squares_to_zero(w in form(1)) {
        prop_assert!(w.d().d().is_zero());
    }

    #[test]
    fn exterior_derivative_squares_to_zero_deg2(w in form(2)) {
        prop_assert!(w.d().d().is_zero());
    }

    // d(a ∧ b) = da ∧ b + (-1)^p a ∧ db.
    #[test]
    fn graded_leibniz_1_1(a in form(1), b in form(1)) {
        let lhs = a.wedge(&b).d();
        let rhs = a.d().wedge(&b).sub(&a.wedge(&b.d()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_leibniz_2_1(a in form(2), b in form(1)) {
        let lhs = a.wedge(&b).d();
        let rhs = a.d().wedge(&b).add(&a.wedge(&b.d()));
        prop_assert_eq!(lhs, rhs);
    }

    // a ∧ b = (-1)^(pq) b ∧ a.
    #[test]
    fn wedge_graded_commutativity(a in form(1), b in form(1), c in form(2)) {
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).neg(), "odd·odd anticommutes");
        prop_assert_eq!(a.wedge(&c), c.wedge(&a), "odd·even commutes");
        prop_assert_eq!(c.wedge(&c.d()), c.d().wedge(&c), "even·odd commutes");
    }

    // Wedges of vector fields factor, and the factors wedge back exactly.
    // Constant components suffice: decomposability is pointwise algebra, and
    // symbolic-coefficient factoring is pinned by a directional test.
    #[test]
    fn decomposables_factor_with_certificate(
        comps in proptest::collection::vec(-3i64..=3, 3 * DIM),
    ) {
        let c = chart();
        let vs: Vec<Multivector> = comps
            .chunks(DIM)
            .map(|row| {
                Multivector::from_terms(
                    &c,
                    1,
                    row.iter().enumerate().map(|(i, v)| (vec![i], Expr::int(*v))),
                )
            })
            .collect();
        let z = decomposable_from_vectors(&vs);
        prop_assume!(!z.is_zero());
        let factors = factor_decomposable(&z).expect("a wedge of vectors must factor");
        prop_assert_eq!(decomposable_from_vectors(&factors), z);
    }

    #[test]
    fn lie_bracket_is_antisymmetric(x in multivector(1), y in multivector(1)) {
        prop_assert_eq!(lie_bracket(&x, &y), lie_bracket(&y, &x).neg());
    }

    #[test]
    fn lie_bracket_satisfies_jacobi(
        x in multivector(1),
        y in multivector(1),
        z in multivector(1),
    ) {
        let total = lie_bracket(&x, &lie_bracket(&y, &z))
            .add(&lie_bracket(&y, &lie_bracket(&z, &x)))
            .add(&lie_bracket(&z, &lie_bracket(&x, &y)));
        prop_assert!(total.is_zero(), "jacobi defect {}", total);
    }

    // Contraction is a derivation pairing: for a vector v,
    // v ⌟ (a ∧ b) = (v ⌟ a) ∧ b + (-1)^p a ∧ (v ⌟ b).
    #[test]
    fn vector_contraction_is_an_antiderivation(v in multivector(1), a in form(1), b in form(2)) {
        let lhs = contract_form(&v, &a.wedge(&b));
        let rhs = contract_form(&v, &a)
            .wedge(&b)
            .sub(&a.wedge(&contract_form(&v, &b)));
        prop_assert_eq!(lhs, rhs);
    }
}
