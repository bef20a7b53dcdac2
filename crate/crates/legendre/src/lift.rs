//! Velocity lifts: the decomposable n-vectors a field's first derivatives
//! trace out, together with the tangent directions of that cone.
//!
//! A velocity table `v{i}_{μ}` lifts to
//! `z = (∂/∂x¹ + v{i}_1 ∂/∂y^i) ∧ ⋯ ∧ (∂/∂xⁿ + v{i}_n ∂/∂y^i)`,
//! the unit-volume decomposable n-vector whose components are the n×n
//! minors of the matrix `[Id | v]`. Its pairing with the canonical n-form
//! of a momentum chart is the bilinear part of the W-function.

use std::collections::BTreeMap;

use exterior::{pair, Multivector};
use multisympl::MultisymplecticSpace;
use symcore::Expr;

use crate::spec::LagrangianSpec;

/// The frame vectors `∂/∂x^μ + Σ_i v{i}_{μ} ∂/∂y^i` on the space's chart.
fn lifted_frame(spec: &LagrangianSpec, space: &MultisymplecticSpace) -> Vec<Multivector> {
    let chart = space.chart();
    (1..=spec.n())
        .map(|mu| {
            let mut vec = Multivector::coordinate(chart, &spec.base_names()[mu - 1]);
            for i in 1..=spec.k() {
                let dir = Multivector::coordinate(chart, &spec.fiber_names()[i - 1]);
                vec = vec.add(&dir.scale(&Expr::var(spec.velocity_name(i, mu))));
            }
            vec
        })
        .collect()
}

/// The lift with symbolic velocity entries.
pub fn velocity_lift_symbolic(spec: &LagrangianSpec, space: &MultisymplecticSpace) -> Multivector {
    let frame = lifted_frame(spec, space);
    let mut z = frame[0].clone();
    for vec in &frame[1..] {
        z = z.wedge(vec);
    }
    z
}

/// The lift with the given velocity values substituted; names absent from
/// the map stay symbolic.
pub fn velocity_lift(
    spec: &LagrangianSpec,
    space: &MultisymplecticSpace,
    values: &BTreeMap<String, Expr>,
) -> Multivector {
    velocity_lift_symbolic(spec, space).map_coeffs(|c| c.subst_many(values))
}

/// Tangent vectors of the decomposable cone at the symbolic lift.
///
/// `velocity_directions` are the `∂z/∂v{i}_{μ}` in the order of
/// [`LagrangianSpec::velocity_names`]; `scaling_direction` is the derivative
/// along the curve that rescales every base frame vector, evaluated at scale
/// one. The affine slice of unit-volume lifts has tangent space spanned by
/// the velocity directions alone; the full cone adds the scaling direction.
pub struct ConeTangents {
    pub velocity_directions: Vec<Multivector>,
    pub scaling_direction: Multivector,
}

pub fn cone_tangents(spec: &LagrangianSpec, space: &MultisymplecticSpace) -> ConeTangents {
    let chart = space.chart();
    let frame = lifted_frame(spec, space);
    let wedge_with_slot = |slot: usize, replacement: &Multivector| -> Multivector {
        let mut z: Option<Multivector> = None;
        for (j, vec) in frame.iter().enumerate() {
            let factor = if j == slot { replacement } else { vec };
            z = Some(match z {
                None => factor.clone(),
                Some(acc) => acc.wedge(factor),
            });
        }
        z.expect("frame is nonempty")
    };

    let mut velocity_directions = Vec::with_capacity(spec.n() * spec.k());
    for (i, mu) in spec.velocity_indices() {
        let dir = Multivector::coordinate(chart, &spec.fiber_names()[i - 1]);
        velocity_directions.push(wedge_with_slot(mu - 1, &dir));
    }

    let mut scaling = Multivector::zero(chart, spec.n());
    for mu in 1..=spec.n() {
        let bare = Multivector::coordinate(chart, &spec.base_names()[mu - 1]);
        scaling = scaling.add(&wedge_with_slot(mu - 1, &bare));
    }

    ConeTangents {
        velocity_directions,
        scaling_direction: scaling,
    }
}

/// The W-function `W(q, v, p) = ⟨z(v), θ⟩ − L(q, v)` on the given chart.
pub fn w_function(spec: &LagrangianSpec, space: &MultisymplecticSpace) -> Expr {
    let z = velocity_lift_symbolic(spec, space);
    let theta = space
        .theta()
        .expect("momentum charts built by this crate carry a canonical form");
    &pair(&z, theta) - spec.lagrangian()
}
