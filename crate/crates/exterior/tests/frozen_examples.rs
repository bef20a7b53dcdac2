//! Hand-derived directional cases that pin every sign convention.
//!
//! Each expected value below was worked out on paper from the definitions
//! (diagonal pairing, adjunction-derived interior products) and is asserted
//! literally, so a sign regression anywhere in the algebra fails here.

use std::sync::Arc;

use exterior::{
    contract_form, contract_vector, factor_decomposable, lie_bracket, pair, Chart, Form,
    Multivector,
};
use symcore::Expr;

fn base3() -> Arc<Chart> {
    Chart::new(["x1", "x2", "x3"])
}

#[test]
fn pairing_is_diagonal_on_coordinate_bases() {
    let c = base3();
    let x12 = Multivector::wedge_of(&c, &["x1", "x2"]);
    let dx12 = Form::wedge_of(&c, &["x1", "x2"]);
    let dx13 = Form::wedge_of(&c, &["x1", "x3"]);
    assert_eq!(pair(&x12, &dx12), Expr::one());
    assert_eq!(pair(&x12, &dx13), Expr::zero());
    // Reordering a factor flips the sign on both sides consistently.
    let x21 = Multivector::wedge_of(&c, &["x2", "x1"]);
    assert_eq!(pair(&x21, &dx12), -Expr::one());
}

#[test]
fn coordinate_vector_into_volume_form() {
    // ∂_μ ⌟ (dx1∧dx2∧dx3) = (-1)^(μ-1) dx^(complement), μ = 1, 2, 3.
    let c = base3();
    let vol = Form::wedge_of(&c, &["x1", "x2", "x3"]);
    let cases = [
        ("x1", Form::wedge_of(&c, &["x2", "x3"]), 1),
        ("x2", Form::wedge_of(&c, &["x1", "x3"]), -1),
        ("x3", Form::wedge_of(&c, &["x1", "x2"]), 1),
    ];
    for (name, expect, sign) in cases {
        let v = Multivector::coordinate(&c, name);
        let got = contract_form(&v, &vol);
        let expect = if sign < 0 { expect.neg() } else { expect };
        assert_eq!(got, expect, "∂{name} ⌟ vol");
    }
}

#[test]
fn bivector_contracted_by_coordinate_differential() {
    // (∂1∧∂2) ⌞ dx1 = ∂2 and (∂1∧∂2) ⌞ dx2 = -∂1.
    let c = base3();
    let b = Multivector::wedge_of(&c, &["x1", "x2"]);
    let dx1 = Form::coordinate(&c, "x1");
    let dx2 = Form::coordinate(&c, "x2");
    assert_eq!(contract_vector(&b, &dx1), Multivector::coordinate(&c, "x2"));
    assert_eq!(
        contract_vector(&b, &dx2),
        Multivector::coordinate(&c, "x1").neg()
    );
}

#[test]
fn exterior_derivative_of_linear_coefficients() {
    // d(x1 dx2) = dx1∧dx2; applying d again gives zero.
    let c = base3();
    let a = Form::coordinate(&c, "x2").scale(&Expr::var("x1"));
    let da = a.d();
    assert_eq!(da, Form::wedge_of(&c, &["x1", "x2"]));
    assert!(da.d().is_zero());
}

#[test]
fn lie_bracket_directional_case() {
    // [x1 ∂2, ∂1] = -∂2.
    let c = base3();
    let x = Multivector::coordinate(&c, "x2").scale(&Expr::var("x1"));
    let y = Multivector::coordinate(&c, "x1");
    assert_eq!(lie_bracket(&x, &y), Multivector::coordinate(&c, "x2").neg());
    assert!(lie_bracket(&y, &y).is_zero());
}

#[test]
fn interior_product_transpose_identity() {
    // pair(X, v ⌟ w) = (-1)^n (X ⌟ w)(v) for an n-vector X, a vector v and
    // an (n+1)-form w; here n = 2 on a 4-coordinate chart.
    let c = Chart::new(["q1", "q2", "q3", "q4"]);
    let w = Form::wedge_of(&c, &["q1", "q2", "q3"])
        .add(&Form::wedge_of(&c, &["q2", "q3", "q4"]).scale(&Expr::var("q1")));
    let v = Multivector::coordinate(&c, "q2")
        .add(&Multivector::coordinate(&c, "q4").scale(&Expr::var("q3")));
    let x = Multivector::wedge_of(&c, &["q1", "q3"])
        .add(&Multivector::wedge_of(&c, &["q2", "q4"]).scale(&Expr::int(2)));
    let lhs = pair(&x, &contract_form(&v, &w));
    let x_hook_w = contract_form(&x, &w);
    let rhs = pair(&v, &x_hook_w);
    assert_eq!(lhs, rhs, "(-1)^2 = 1 for n = 2");
}

#[test]
fn factoring_a_decomposable_bivector() {
    let c = Chart::new(["q1", "q2", "q3", "q4"]);
    let v1 = Multivector::coordinate(&c, "q1")
        .add(&Multivector::coordinate(&c, "q3").scale(&Expr::int(2)));
    let v2 = Multivector::coordinate(&c, "q2")
        .sub(&Multivector::coordinate(&c, "q4").scale(&Expr::var("q1")));
    let z = v1.wedge(&v2);
    let factors = factor_decomposable(&z).expect("wedge of two vectors is decomposable");
    assert_eq!(factors.len(), 2);
    assert_eq!(factors[0].wedge(&factors[1]), z);
}

#[test]
fn symplectic_like_bivector_is_not_decomposable() {
    let c = Chart::new(["q1", "q2", "q3", "q4"]);
    let z = Multivector::wedge_of(&c, &["q1", "q2"])
        .add(&Multivector::wedge_of(&c, &["q3", "q4"]));
    assert!(factor_decomposable(&z).is_none());
    // Its own wedge square is nonzero, the classical obstruction.
    assert!(!z.wedge(&z).is_zero());
}
