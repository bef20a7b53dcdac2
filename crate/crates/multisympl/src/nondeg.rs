//! Kernel test for the interior-product map ξ ↦ ξ⌟Ω.

use exterior::{contract_form, Form, Multivector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symcore::{solve_linear, Expr};

/// Verdict of the kernel computation.  A degenerate form comes with a basis
/// of tangent vectors annihilating it; when the degeneracy only showed up at
/// a sampled point, that point is reported too.
#[derive(Clone, Debug)]
pub enum Nondegeneracy {
    Nondegenerate,
    Degenerate {
        kernel: Vec<Multivector>,
        at_point: Option<Vec<(String, Expr)>>,
    },
}

impl Nondegeneracy {
    pub fn is_nondegenerate(&self) -> bool {
        matches!(self, Nondegeneracy::Nondegenerate)
    }
}

const SAMPLE_SEED: u64 = 0x6e6f_6e64_6567_3130;
const SAMPLE_COUNT: usize = 10;

/// Kernel of ξ ↦ ξ⌟ω over tangent vectors with unknown components.
///
/// The system is solved symbolically, which answers the question at a
/// generic point.  When the coefficients of ω depend on the coordinates the
/// generic elimination may divide by expressions that vanish somewhere, so
/// the check is repeated at ten seeded random rational points; a kernel
/// found at any of them makes the verdict degenerate.
pub fn form_kernel(omega: &Form) -> Nondegeneracy {
    let chart = omega.chart();
    let dim = chart.dim();

    let mut prefix = String::from("xi_");
    while chart.names().iter().any(|n| n.starts_with(prefix.as_str())) {
        prefix.push('_');
    }
    let unknowns: Vec<String> = (0..dim).map(|i| format!("{prefix}{i}")).collect();
    let unknown_refs: Vec<&str> = unknowns.iter().map(|s| s.as_str()).collect();

    let xi = Multivector::from_terms(
        chart,
        1,
        (0..dim).map(|i| (vec![i], Expr::var(&unknowns[i]))),
    );
    let equations: Vec<Expr> = contract_form(&xi, omega)
        .iter()
        .map(|(_, c)| c.clone())
        .collect();

    let generic = solve_linear(&equations, &unknown_refs)
        .expect("contraction equations are linear and homogeneous in the components");
    if !generic.kernel.is_empty() {
        let kernel = generic
            .kernel
            .iter()
            .map(|components| {
                Multivector::from_terms(
                    chart,
                    1,
                    components.iter().cloned().enumerate().map(|(i, c)| (vec![i], c)),
                )
            })
            .collect();
        return Nondegeneracy::Degenerate {
            kernel,
            at_point: None,
        };
    }

    // Free symbols in the coefficients (chart coordinates or parameters)
    // mean the symbolic answer only covers generic points.
    let mut symbols: Vec<String> = equations
        .iter()
        .flat_map(|eq| eq.free_vars())
        .filter(|name| !name.starts_with(prefix.as_str()))
        .collect();
    symbols.sort();
    symbols.dedup();
    if symbols.is_empty() {
        return Nondegeneracy::Nondegenerate;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    for _ in 0..SAMPLE_COUNT {
        let point: Vec<(String, Expr)> = symbols
            .iter()
            .map(|name| {
                let num = rng.gen_range(-9i64..=9);
                let den = rng.gen_range(1i64..=4);
                (name.clone(), Expr::rat(num, den))
            })
            .collect();
        let map: std::collections::BTreeMap<String, Expr> = point.iter().cloned().collect();
        let sampled: Vec<Expr> = equations.iter().map(|eq| eq.subst_many(&map)).collect();
        let solved = solve_linear(&sampled, &unknown_refs)
            .expect("sampled contraction equations stay linear and homogeneous");
        if !solved.kernel.is_empty() {
            let kernel = solved
                .kernel
                .iter()
                .map(|components| {
                    Multivector::from_terms(
                        chart,
                        1,
                        components.iter().cloned().enumerate().map(|(i, c)| (vec![i], c)),
                    )
                })
                .collect();
            return Nondegeneracy::Degenerate {
                kernel,
                at_point: Some(point),
            };
        }
    }
    Nondegeneracy::Nondegenerate
}
