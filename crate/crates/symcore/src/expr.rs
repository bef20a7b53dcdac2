//! Canonical expressions: quotients of expanded polynomials.
//!
//! Every `Expr` is stored as `num/den` with the gcd cancelled and the
//! denominator monic under the graded-lex order, so two expressions equal
//! as rational functions of the variables and formal symbols have identical
//! representations. Formal applications are opaque atoms keyed by
//! `(symbol, derivative counts, normalized arguments)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::atom::{is_builtin, AppAtom, Atom};
use crate::poly::{poly_gcd, Monomial, Poly};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Expr {
    num: Poly,
    den: Poly,
}

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    UnboundVar(String),
    #[error("no numeric interpretation for `{0}`")]
    UnboundFunction(String),
    #[error("division by zero while evaluating")]
    DivisionByZero,
}

/// Numeric environment for floating-point evaluation.
pub trait NumEnv {
    fn var(&self, name: &str) -> Option<f64>;
    /// Value of a formal application (with derivative counts) at the given
    /// argument values. Builtins are handled before this is consulted.
    fn app(&self, symbol: &str, dcounts: &[u32], args: &[f64]) -> Option<f64>;
}

/// Map-backed environment; function handlers are optional.
#[derive(Default)]
pub struct MapEnv {
    pub vars: BTreeMap<String, f64>,
    #[allow(clippy::type_complexity)]
    pub funcs: BTreeMap<String, Box<dyn Fn(&[u32], &[f64]) -> Option<f64>>>,
}

impl MapEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: impl Into<String>, v: f64) -> &mut Self {
        self.vars.insert(name.into(), v);
        self
    }

    pub fn set_fn(
        &mut self,
        name: impl Into<String>,
        f: impl Fn(&[u32], &[f64]) -> Option<f64> + 'static,
    ) -> &mut Self {
        self.funcs.insert(name.into(), Box::new(f));
        self
    }
}

impl NumEnv for MapEnv {
    fn var(&self, name: &str) -> Option<f64> {
        self.vars.get(name).copied()
    }
    fn app(&self, symbol: &str, dcounts: &[u32], args: &[f64]) -> Option<f64> {
        self.funcs.get(symbol).and_then(|f| f(dcounts, args))
    }
}

impl Expr {
    fn make(num: Poly, den: Poly) -> Expr {
        assert!(!den.is_zero(), "division by symbolically zero expression");
        if num.is_zero() {
            return Expr {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den);
            if let Some(c) = g.as_constant() {
                debug_assert!(!c.is_zero());
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc = den
            .leading()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        let inv = BigRational::one() / lc;
        Expr {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Expr {
        Expr::make(Poly::zero(), Poly::one())
    }

    pub fn one() -> Expr {
        Expr::int(1)
    }

    pub fn int(n: i64) -> Expr {
        Expr::from_big(BigRational::from_integer(n.into()))
    }

    pub fn rat(n: i64, d: i64) -> Expr {
        assert!(d != 0, "rational with zero denominator");
        Expr::from_big(BigRational::new(n.into(), d.into()))
    }

    pub fn from_big(c: BigRational) -> Expr {
        Expr {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn var(name: impl Into<String>) -> Expr {
        Expr {
            num: Poly::atom(Atom::var(name)),
            den: Poly::one(),
        }
    }

    pub fn from_atom(a: Atom) -> Expr {
        Expr {
            num: Poly::atom(a),
            den: Poly::one(),
        }
    }

    /// Polynomial expression with denominator 1.
    pub fn from_poly(p: Poly) -> Expr {
        Expr {
            num: p,
            den: Poly::one(),
        }
    }

    /// Formal application `symbol(args...)`.
    pub fn app(symbol: impl Into<String>, args: Vec<Expr>) -> Expr {
        Expr::from_atom(Atom::App(AppAtom::new(symbol, args)))
    }

    /// Formal application differentiated `dcounts[i]` times in slot `i`.
    pub fn app_d(symbol: impl Into<String>, dcounts: Vec<u32>, args: Vec<Expr>) -> Expr {
        let args_len = args.len();
        assert_eq!(dcounts.len(), args_len);
        Expr::from_atom(Atom::App(AppAtom {
            symbol: symbol.into(),
            dcounts,
            args,
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn recip(&self) -> Expr {
        Expr::make(self.den.clone(), self.num.clone())
    }

    pub fn pow_i(&self, e: i64) -> Expr {
        if e < 0 {
            return self.recip().pow_i(-e);
        }
        let mut out = Expr::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// All atoms occurring anywhere, including inside application arguments.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out.into_iter().collect()
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        for a in self.num.atoms().chain(self.den.atoms()) {
            if let Atom::App(app) = a {
                for arg in &app.args {
                    arg.collect_atoms(out);
                }
            }
            out.insert(a.clone());
        }
    }

    /// Free variable names, including those inside application arguments.
    pub fn free_vars(&self) -> BTreeSet<String> {
        self.atoms()
            .into_iter()
            .filter_map(|a| match a {
                Atom::Var(v) => Some(v),
                Atom::App(_) => None,
            })
            .collect()
    }

    pub fn contains_var(&self, name: &str) -> bool {
        self.free_vars().contains(name)
    }

    /// Rebuild with atoms transformed by `f`; `None` keeps the atom (its
    /// application arguments are still rewritten recursively).
    pub fn map_atoms(&self, f: &impl Fn(&Atom) -> Option<Expr>) -> Expr {
        let num = map_poly(&self.num, f);
        let den = map_poly(&self.den, f);
        num / den
    }

    /// Substitute a variable by an expression.
    pub fn subst(&self, name: &str, value: &Expr) -> Expr {
        self.map_atoms(&|a| match a {
            Atom::Var(v) if v == name => Some(value.clone()),
            _ => None,
        })
    }

    /// Substitute several variables simultaneously.
    pub fn subst_many(&self, map: &BTreeMap<String, Expr>) -> Expr {
        if map.is_empty() {
            return self.clone();
        }
        self.map_atoms(&|a| match a {
            Atom::Var(v) => map.get(v).cloned(),
            _ => None,
        })
    }

    /// Partial derivative with respect to a variable.
    pub fn diff(&self, name: &str) -> Expr {
        let dn = diff_poly(&self.num, name);
        if self.den.is_constant() {
            let d = Expr {
                num: self.den.clone(),
                den: Poly::one(),
            };
            return dn / d;
        }
        let dd = diff_poly(&self.den, name);
        let num_e = Expr {
            num: self.num.clone(),
            den: Poly::one(),
        };
        let den_e = Expr {
            num: self.den.clone(),
            den: Poly::one(),
        };
        (dn * den_e.clone() - num_e * dd) / (den_e.clone() * den_e)
    }

    /// Exact rational evaluation; fails on any formal application.
    pub fn eval_rational(&self, vars: &BTreeMap<String, BigRational>) -> Result<BigRational, EvalError> {
        let n = eval_poly_rational(&self.num, vars)?;
        let d = eval_poly_rational(&self.den, vars)?;
        if d.is_zero() {
            return Err(EvalError::DivisionByZero);
        }
        Ok(n / d)
    }

    /// Floating-point evaluation through a numeric environment.
    pub fn eval_f64(&self, env: &dyn NumEnv) -> Result<f64, EvalError> {
        let n = eval_poly_f64(&self.num, env)?;
        let d = eval_poly_f64(&self.den, env)?;
        if d == 0.0 {
            return Err(EvalError::DivisionByZero);
        }
        Ok(n / d)
    }
}

fn map_poly(p: &Poly, f: &impl Fn(&Atom) -> Option<Expr>) -> Expr {
    let mut out = Expr::zero();
    for (m, c) in &p.0 {
        let mut term = Expr::from_big(c.clone());
        for (a, e) in &m.0 {
            let base = match f(a) {
                Some(repl) => repl,
                None => match a {
                    Atom::Var(_) => Expr::from_atom(a.clone()),
                    Atom::App(app) => {
                        let args: Vec<Expr> = app.args.iter().map(|x| x.map_atoms(f)).collect();
                        Expr::from_atom(Atom::App(AppAtom {
                            symbol: app.symbol.clone(),
                            dcounts: app.dcounts.clone(),
                            args,
                        }))
                    }
                },
            };
            term = term * base.pow_i(*e as i64);
        }
        out = out + term;
    }
    out
}

/// Derivative of a single atom, as an expression.
fn diff_atom(a: &Atom, name: &str) -> Expr {
    match a {
        Atom::Var(v) => {
            if v == name {
                Expr::one()
            } else {
                Expr::zero()
            }
        }
        Atom::App(app) => {
            let mut total = Expr::zero();
            for (slot, arg) in app.args.iter().enumerate() {
                let darg = arg.diff(name);
                if darg.is_zero() {
                    continue;
                }
                let partial = if is_builtin(&app.symbol) {
                    debug_assert!(app.dcounts.iter().all(|&d| d == 0));
                    match app.symbol.as_str() {
                        "sin" => Expr::app("cos", app.args.clone()),
                        "cos" => -Expr::app("sin", app.args.clone()),
                        "exp" => Expr::from_atom(Atom::App(app.clone())),
                        _ => unreachable!("unknown builtin"),
                    }
                } else {
                    let mut d = app.dcounts.clone();
                    d[slot] += 1;
                    Expr::from_atom(Atom::App(AppAtom {
                        symbol: app.symbol.clone(),
                        dcounts: d,
                        args: app.args.clone(),
                    }))
                };
                total = total + partial * darg;
            }
            total
        }
    }
}

fn diff_poly(p: &Poly, name: &str) -> Expr {
    let mut out = Expr::zero();
    for (m, c) in &p.0 {
        for (a, e) in &m.0 {
            let da = diff_atom(a, name);
            if da.is_zero() {
                continue;
            }
            // c * e * a^(e-1) * da * (rest of the monomial)
            let mut term = Expr::from_big(c * BigRational::from_integer(BigInt::from(*e)));
            term = term * Expr::from_atom(a.clone()).pow_i(*e as i64 - 1) * da;
            for (b, eb) in &m.0 {
                if b != a {
                    term = term * Expr::from_atom(b.clone()).pow_i(*eb as i64);
                }
            }
            out = out + term;
        }
    }
    out
}

fn eval_poly_rational(
    p: &Poly,
    vars: &BTreeMap<String, BigRational>,
) -> Result<BigRational, EvalError> {
    let mut out = BigRational::zero();
    for (m, c) in &p.0 {
        let mut term = c.clone();
        for (a, e) in &m.0 {
            let v = match a {
                Atom::Var(v) => vars
                    .get(v)
                    .cloned()
                    .ok_or_else(|| EvalError::UnboundVar(v.clone()))?,
                Atom::App(app) => return Err(EvalError::UnboundFunction(app.symbol.clone())),
            };
            for _ in 0..*e {
                term *= &v;
            }
        }
        out += term;
    }
    Ok(out)
}

fn eval_poly_f64(p: &Poly, env: &dyn NumEnv) -> Result<f64, EvalError> {
    let mut out = 0.0;
    for (m, c) in &p.0 {
        let mut term = c.to_f64().expect("rational representable as f64");
        for (a, e) in &m.0 {
            let v = eval_atom_f64(a, env)?;
            term *= v.powi(*e as i32);
        }
        out += term;
    }
    Ok(out)
}

fn eval_atom_f64(a: &Atom, env: &dyn NumEnv) -> Result<f64, EvalError> {
    match a {
        Atom::Var(v) => env
            .var(v)
            .ok_or_else(|| EvalError::UnboundVar(v.clone())),
        Atom::App(app) => {
            let args: Result<Vec<f64>, EvalError> =
                app.args.iter().map(|x| x.eval_f64(env)).collect();
            let args = args?;
            if is_builtin(&app.symbol) {
                return Ok(match app.symbol.as_str() {
                    "sin" => args[0].sin(),
                    "cos" => args[0].cos(),
                    "exp" => args[0].exp(),
                    _ => unreachable!(),
                });
            }
            env.app(&app.symbol, &app.dcounts, &args)
                .ok_or_else(|| EvalError::UnboundFunction(app.symbol.clone()))
        }
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        &self + &rhs
    }
}

impl Add for &Expr {
    type Output = Expr;
    fn add(self, rhs: &Expr) -> Expr {
        if self.den == rhs.den {
            return Expr::make(self.num.add(&rhs.num), self.den.clone());
        }
        Expr::make(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        &self - &rhs
    }
}

impl Sub for &Expr {
    type Output = Expr;
    fn sub(self, rhs: &Expr) -> Expr {
        self + &(-rhs)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        -&self
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        &self * &rhs
    }
}

impl Mul for &Expr {
    type Output = Expr;
    fn mul(self, rhs: &Expr) -> Expr {
        if self.is_zero() || rhs.is_zero() {
            return Expr::zero();
        }
        Expr::make(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        &self / &rhs
    }
}

impl Div for &Expr {
    type Output = Expr;
    fn div(self, rhs: &Expr) -> Expr {
        Expr::make(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

macro_rules! mixed_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait<&Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: &Expr) -> Expr {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Expr> for &Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

mixed_binop!(Add::add, Sub::sub, Mul::mul, Div::div);

impl std::iter::Sum for Expr {
    fn sum<I: Iterator<Item = Expr>>(iter: I) -> Expr {
        iter.fold(Expr::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Expr {
    fn product<I: Iterator<Item = Expr>>(iter: I) -> Expr {
        iter.fold(Expr::one(), |a, b| a * b)
    }
}

fn fmt_rational(c: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn fmt_atom(a: &Atom, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match a {
        Atom::Var(v) => write!(f, "{v}"),
        Atom::App(app) => {
            let order = app.order();
            if order > 0 {
                if app.args.len() == 1 && order <= 2 {
                    write!(f, "{}{}", app.symbol, if order == 1 { "'" } else { "''" })?;
                } else {
                    let counts: Vec<String> =
                        app.dcounts.iter().map(|d| d.to_string()).collect();
                    write!(f, "D[{}]{}", counts.join(","), app.symbol)?;
                }
            } else {
                write!(f, "{}", app.symbol)?;
            }
            write!(f, "(")?;
            for (i, arg) in app.args.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{arg}")?;
            }
            write!(f, ")")
        }
    }
}

fn fmt_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    // Descending graded-lex for stable, largest-first rendering.
    let mut terms: Vec<(&Monomial, &BigRational)> = p.0.iter().collect();
    terms.sort_by(|(ma, _), (mb, _)| mb.grlex_cmp(ma));
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let ac = c.abs();
        let coeff_is_one = ac.is_one();
        if !coeff_is_one || m.is_one() {
            fmt_rational(&ac, f)?;
            if !m.is_one() {
                write!(f, "*")?;
            }
        }
        for (j, (a, e)) in m.0.iter().enumerate() {
            if j > 0 {
                write!(f, "*")?;
            }
            fmt_atom(a, f)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            fmt_poly(&self.num, f)
        } else {
            write!(f, "(")?;
            fmt_poly(&self.num, f)?;
            write!(f, ")/(")?;
            fmt_poly(&self.den, f)?;
            write!(f, ")")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_quotient_cancels() {
        let x = Expr::var("x");
        let a = (&x * &x - Expr::one()) / (&x - &Expr::one());
        let b = &x + &Expr::one();
        assert_eq!(a, b);
    }

    #[test]
    fn monic_denominator_normalization() {
        let x = Expr::var("x");
        let y = Expr::var("y");
        let a = (Expr::int(2) * &x) / (Expr::int(2) * &y);
        assert_eq!(a, &x / &y);
        // 1/(2 - 2x): denominator scaled monic, numerator takes the scale.
        let b = Expr::one() / (Expr::int(2) - Expr::int(2) * &x);
        assert_eq!(b, Expr::rat(-1, 2) / (&x - &Expr::one()));
    }

    #[test]
    fn derivative_of_quotient() {
        let x = Expr::var("x");
        // d/dx (1/x) = -1/x^2
        let d = x.recip().diff("x");
        assert_eq!(d, -(&x * &x).recip());
    }

    #[test]
    fn derivative_of_builtin_chain() {
        let x = Expr::var("x");
        let s = Expr::app("sin", vec![&x * &x]);
        let d = s.diff("x");
        let expect = Expr::int(2) * &x * Expr::app("cos", vec![&x * &x]);
        assert_eq!(d, expect);
    }

    #[test]
    fn mixed_partials_of_formal_symbol_commute() {
        let u = Expr::app("U", vec![Expr::var("x"), Expr::var("y")]);
        let dxy = u.diff("x").diff("y");
        let dyx = u.diff("y").diff("x");
        assert_eq!(dxy, dyx);
        assert_eq!(dxy, Expr::app_d("U", vec![1, 1], vec![Expr::var("x"), Expr::var("y")]));
    }

    #[test]
    fn substitution_rebuilds_canonically() {
        let x = Expr::var("x");
        let y = Expr::var("y");
        let e = (&x + &y).pow_i(2);
        let s = e.subst("x", &(&y - &Expr::one()));
        let expect = (Expr::int(2) * &y - Expr::one()).pow_i(2);
        assert_eq!(s, expect);
    }
}
