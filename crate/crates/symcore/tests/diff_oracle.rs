//! Symbolic differentiation checked against a central finite difference.
//!
//! The oracle is independent of the symbolic engine: evaluate the original
//! expression numerically at `x ± h` and compare the quotient with the
//! evaluated symbolic derivative at seeded random points.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symcore::{parse_expr, Expr, MapEnv};

const H: f64 = 1e-6;
const REL_TOL: f64 = 1e-6;
const POINTS: usize = 20;

fn env_at(vals: &[(&str, f64)]) -> MapEnv {
    let mut env = MapEnv::new();
    for (n, v) in vals {
        env.set(*n, *v);
    }
    // A smooth stand-in for every formal symbol: g(a, b, ...) with
    // derivative counts handled analytically for the product form
    // exp(sum/4) whose mixed partials are (1/4)^(total) * itself.
    env.set_fn("U", |dcounts: &[u32], args: &[f64]| {
        let s: f64 = args.iter().sum();
        let total: u32 = dcounts.iter().sum();
        Some(0.25f64.powi(total as i32) * (s / 4.0).exp())
    });
    env.set_fn("V", |dcounts: &[u32], args: &[f64]| {
        let s: f64 = args.iter().sum();
        let total: u32 = dcounts.iter().sum();
        Some(0.25f64.powi(total as i32) * (s / 4.0).exp())
    });
    env
}

fn check_derivatives(expr: &Expr, vars: &[&str]) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for var in vars {
        let deriv = expr.diff(var);
        let mut tested = 0;
        while tested < POINTS {
            let point: Vec<(&str, f64)> = vars
                .iter()
                .map(|v| (*v, rng.gen_range(-2.0..2.0)))
                .collect();
            let center = env_at(&point);
            // Skip points too close to a pole of the expression.
            let Ok(f0) = expr.eval_f64(&center) else {
                continue;
            };
            if !f0.is_finite() || f0.abs() > 1e6 {
                continue;
            }
            let mut plus = point.clone();
            let mut minus = point.clone();
            for p in plus.iter_mut() {
                if p.0 == *var {
                    p.1 += H;
                }
            }
            for p in minus.iter_mut() {
                if p.0 == *var {
                    p.1 -= H;
                }
            }
            let fp = expr.eval_f64(&env_at(&plus)).unwrap();
            let fm = expr.eval_f64(&env_at(&minus)).unwrap();
            let numeric = (fp - fm) / (2.0 * H);
            let symbolic = deriv.eval_f64(&center).unwrap();
            let scale = symbolic.abs().max(1.0);
            assert!(
                (numeric - symbolic).abs() / scale < REL_TOL,
                "d/d{var} of {expr} at {point:?}: symbolic {symbolic}, numeric {numeric}"
            );
            tested += 1;
        }
    }
}

#[test]
fn polynomial_and_rational_derivatives_match_finite_differences() {
    let cases = [
        "x^3 - 2*x*y + y^2/3",
        "(x^2 - y^2)/(x - y)",
        "1/(1 + x^2)",
        "(x*y - 1)/(x^2 + y^2 + 1)",
        "x^5/5 - x^2*y^3 + 7*y - 2",
    ];
    for src in cases {
        let e = parse_expr(src).unwrap();
        check_derivatives(&e, &["x", "y"]);
    }
}

#[test]
fn builtin_chain_rules_match_finite_differences() {
    let cases = [
        "sin(x)*cos(y) + exp(x*y/4)",
        "sin(x^2 - y)",
        "exp(sin(x)/2)",
        "cos(x)/(2 + sin(y))",
    ];
    for src in cases {
        let e = parse_expr(src).unwrap();
        check_derivatives(&e, &["x", "y"]);
    }
}

#[test]
fn formal_application_derivatives_match_finite_differences() {
    // U and V stay unevaluated symbols through diff; the numeric environment
    // models them (and their formal derivatives) analytically.
    let cases = [
        Expr::app("U", vec![Expr::var("x"), Expr::var("y")]),
        Expr::app("U", vec![Expr::var("x") * Expr::var("y")]),
        Expr::app("V", vec![parse_expr("x^2 + y^2").unwrap()]) * Expr::var("x"),
        Expr::app("U", vec![Expr::var("x")]) * Expr::app("V", vec![Expr::var("y")])
            + Expr::app("U", vec![Expr::var("y")]),
    ];
    for e in &cases {
        check_derivatives(e, &["x", "y"]);
    }
}

#[test]
fn second_derivatives_match_finite_differences() {
    // Central second difference (f(x+h) - 2 f(x) + f(x-h)) / h^2 against the
    // twice-differentiated expression, on a smooth case (larger h for
    // conditioning).
    let e = parse_expr("sin(x)*exp(x/2) + x^4/12").unwrap();
    let d2 = e.diff("x").diff("x");
    let h = 1e-4;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..POINTS {
        let x: f64 = rng.gen_range(-2.0..2.0);
        let at = |v: f64| e.eval_f64(&env_at(&[("x", v)]));
        let f0 = at(x).unwrap();
        let fp = at(x + h).unwrap();
        let fm = at(x - h).unwrap();
        let numeric = (fp - 2.0 * f0 + fm) / (h * h);
        let symbolic = d2.eval_f64(&env_at(&[("x", x)])).unwrap();
        assert!(
            (numeric - symbolic).abs() / symbolic.abs().max(1.0) < 1e-5,
            "second derivative at {x}: symbolic {symbolic}, numeric {numeric}"
        );
    }
}
