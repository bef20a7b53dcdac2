//! Enlarged pseudofibers: the affine momentum sets dual to one velocity.
//!
//! For a lift z = z(v), the enlarged pseudofiber at (q, v) is the solution
//! set of ∂W/∂v = 0 regarded as an affine system in the momenta. Its
//! direction space is the annihilator of the tangent space of the
//! unit-volume decomposable cone at z, so the kernel returned here is
//! presented as that annihilator: the base volume form first (dual to the
//! scaling the unit-volume slice freezes), then a basis of the annihilator
//! of the full cone tangent, each normalized so its distinguished momentum
//! component is one.

use std::collections::BTreeMap;

use exterior::{pair, Form};
use multisympl::MultisymplecticSpace;
use symcore::{solve_linear, Expr};

use crate::error::LegendreError;
use crate::lift::{cone_tangents, w_function};
use crate::spec::LagrangianSpec;

/// The momentum-direction form `∂θ/∂c` of a momentum coordinate: the basis
/// n-form the coordinate multiplies inside the canonical form. On restricted
/// charts an identified coordinate picks up both signed occurrences.
pub fn momentum_direction(space: &MultisymplecticSpace, name: &str) -> Form {
    let theta = space
        .theta()
        .expect("momentum charts built by this crate carry a canonical form");
    theta.map_coeffs(|c| c.diff(name))
}

/// An enlarged pseudofiber, presented as a particular momentum point plus
/// the annihilator basis.
#[derive(Clone, Debug)]
pub struct Pseudofiber {
    /// Momentum coordinate names, in chart order.
    pub momenta: Vec<String>,
    /// The expressions ∂W/∂v, one per velocity, affine in the momenta.
    pub equations: Vec<Expr>,
    /// A particular solution, free momentum components set to zero.
    pub particular: Form,
    /// Components of `particular` per entry of `momenta`.
    pub particular_components: Vec<Expr>,
    /// Direction basis: the base volume form, then the cone annihilator.
    pub kernel: Vec<Form>,
    /// Dimension of the solution set.
    pub dimension: usize,
    /// Nonvanishing assumptions made while solving (generically empty).
    pub assumptions: Vec<Expr>,
}

/// Solve ∂W/∂v = 0 for the momenta at the point bound by `values`
/// (coordinates and velocities; absent names stay symbolic).
pub fn enlarged_pseudofiber(
    spec: &LagrangianSpec,
    space: &MultisymplecticSpace,
    values: &BTreeMap<String, Expr>,
) -> Result<Pseudofiber, LegendreError> {
    let theta = space
        .theta()
        .expect("momentum charts built by this crate carry a canonical form");
    let momenta: Vec<String> = space.momenta().iter().map(|m| m.name.clone()).collect();
    let momentum_refs: Vec<&str> = momenta.iter().map(|s| s.as_str()).collect();
    let directions: Vec<Form> = momenta
        .iter()
        .map(|name| momentum_direction(space, name))
        .collect();

    let w = w_function(spec, space);
    let equations: Vec<Expr> = spec
        .velocity_names()
        .iter()
        .map(|v| w.diff(v).subst_many(values))
        .collect();

    let solution = solve_linear(&equations, &momentum_refs)?;
    debug_assert!(
        solution.conditions.is_empty(),
        "the momentum system of a lift is always solvable"
    );
    let mut assumptions = solution.assumptions.clone();

    // Assemble the particular point as an n-form.
    let mut particular = Form::zero(space.chart(), space.n());
    for (component, direction) in solution.particular.iter().zip(&directions) {
        particular = particular.add(&direction.scale(component));
    }

    // Annihilator of the full cone tangent: the homogeneous momentum system
    // plus the scaling direction, solved with the same unknowns. Its kernel
    // spans the directions of the pseudofiber that change nothing but the
    // volume normalization is blind to.
    let tangents = cone_tangents(spec, space);
    let mut cone_equations: Vec<Expr> =
        vec![pair(&tangents.scaling_direction, theta).subst_many(values)];
    for dir in &tangents.velocity_directions {
        cone_equations.push(pair(dir, theta).subst_many(values));
    }
    let cone = solve_linear(&cone_equations, &momentum_refs)?;
    debug_assert!(cone.conditions.is_empty());
    for a in cone.assumptions {
        if !assumptions.contains(&a) {
            assumptions.push(a);
        }
    }

    let mut kernel = vec![space.base_volume()];
    for vector in &cone.kernel {
        let mut form = Form::zero(space.chart(), space.n());
        for (component, direction) in vector.iter().zip(&directions) {
            form = form.add(&direction.scale(component));
        }
        kernel.push(form);
    }

    let dimension = solution.kernel.len();
    assert_eq!(
        dimension,
        kernel.len(),
        "the annihilator of the unit-volume cone is the volume direction plus the annihilator of the full cone"
    );

    Ok(Pseudofiber {
        momenta,
        equations,
        particular,
        particular_components: solution.particular,
        kernel,
        dimension,
        assumptions,
    })
}

impl Pseudofiber {
    /// The momentum components of a form on the same chart, keyed by name.
    pub fn components_of(space: &MultisymplecticSpace, form: &Form) -> BTreeMap<String, Expr> {
        let mut out = BTreeMap::new();
        for label in space.momenta() {
            let direction = momentum_direction(space, &label.name);
            // Read the coefficient off any index tuple the direction uses;
            // directions are ±1 combinations of distinct basis forms, so the
            // first term determines the component.
            let (idx, lead) = direction
                .iter()
                .next()
                .expect("momentum directions are nonzero");
            out.insert(label.name.clone(), &form.coeff(idx) / lead);
        }
        out
    }
}
