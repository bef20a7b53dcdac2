//! Multivectors (alternating contravariant tensors) and the operations that
//! pair them with forms.
//!
//! Conventions, fixed once here and derived everywhere else:
//! - Pairing `pair(X, w)` of equal degrees is diagonal on coordinate bases:
//!   `pair(∂_I, dq^J) = δ_I^J` (the determinant convention).
//! - The two interior products are defined by their adjunctions with the
//!   wedge and the pairing:
//!   `pair(Y, contract_form(X, w)) = pair(X ∧ Y, w)` for deg X ≤ deg w, and
//!   `pair(contract_vector(X, w), v) = pair(X, w ∧ v)` for deg X ≥ deg w.
//!   Both reduce to the same rule: an index subset contributes the sign of
//!   the permutation sorting (subset, complement) into the containing tuple.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use symcore::Expr;

use crate::chart::Chart;
use crate::form::Form;
use crate::sign::{complement, is_subset, merge_sign};
use crate::terms::TermMap;

/// A degree-k multivector on a chart, sparse over strictly increasing
/// k-tuples of coordinate indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector {
    chart: Arc<Chart>,
    degree: usize,
    pub(crate) terms: TermMap,
}

impl Multivector {
    pub fn zero(chart: &Arc<Chart>, degree: usize) -> Multivector {
        Multivector {
            chart: chart.clone(),
            degree,
            terms: TermMap::new(),
        }
    }

    /// The coordinate vector field `∂/∂q_i`.
    pub fn coordinate(chart: &Arc<Chart>, name: &str) -> Multivector {
        let i = chart.expect_index(name);
        let mut terms = TermMap::new();
        terms.insert_signed(vec![i], Expr::one());
        Multivector {
            chart: chart.clone(),
            degree: 1,
            terms,
        }
    }

    pub fn from_terms(
        chart: &Arc<Chart>,
        degree: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Expr)>,
    ) -> Multivector {
        let mut terms = TermMap::new();
        for (idx, c) in entries {
            assert_eq!(idx.len(), degree, "index tuple of wrong length");
            for &i in &idx {
                assert!(i < chart.dim(), "coordinate index out of range");
            }
            terms.insert_signed(idx, c);
        }
        Multivector {
            chart: chart.clone(),
            degree,
            terms,
        }
    }

    /// Wedge of coordinate vector fields named in order.
    pub fn wedge_of(chart: &Arc<Chart>, names: &[&str]) -> Multivector {
        let idx: Vec<usize> = names.iter().map(|n| chart.expect_index(n)).collect();
        Multivector::from_terms(chart, names.len(), [(idx, Expr::one())])
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, idx: &[usize]) -> Expr {
        self.terms.0.get(idx).cloned().unwrap_or_else(Expr::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Expr)> {
        self.terms.0.iter()
    }

    pub fn terms_map(&self) -> &BTreeMap<Vec<usize>, Expr> {
        &self.terms.0
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        assert_eq!(self.degree, other.degree, "multivectors of different degree");
        Multivector {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self.terms.add(&other.terms),
        }
    }

    pub fn sub(&self, other: &Multivector) -> Multivector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Multivector {
        Multivector {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self.terms.neg(),
        }
    }

    pub fn scale(&self, s: &Expr) -> Multivector {
        Multivector {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self.terms.scale(s),
        }
    }

    pub fn wedge(&self, other: &Multivector) -> Multivector {
        assert!(
            Arc::ptr_eq(&self.chart, &other.chart) || self.chart == other.chart,
            "wedge of multivectors on different charts"
        );
        Multivector {
            chart: self.chart.clone(),
            degree: self.degree + other.degree,
            terms: self.terms.wedge(&other.terms),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Expr) -> Expr) -> Multivector {
        Multivector {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self.terms.map_coeffs(&f),
        }
    }

    /// Directional derivative of a function along a vector field.
    pub fn apply_to_scalar(&self, f: &Expr) -> Expr {
        assert_eq!(self.degree, 1, "directional derivative of a non-vector");
        let mut out = Expr::zero();
        for (idx, c) in &self.terms.0 {
            out = out + c * &f.diff(self.chart.name(idx[0]));
        }
        out
    }
}

/// Pairing of a k-vector with a k-form, diagonal on coordinate bases.
pub fn pair(x: &Multivector, w: &Form) -> Expr {
    assert_eq!(x.degree(), w.degree(), "pairing of mismatched degrees");
    let mut out = Expr::zero();
    for (idx, c) in x.iter() {
        let m = w.coeff(idx);
        if !m.is_zero() {
            out = out + c * &m;
        }
    }
    out
}

/// Interior product of a k-vector into an l-form, k ≤ l, defined by
/// `pair(Y, contract_form(X, w)) = pair(X ∧ Y, w)`.
pub fn contract_form(x: &Multivector, w: &Form) -> Form {
    assert!(
        x.degree() <= w.degree(),
        "contract_form needs deg X ≤ deg w"
    );
    let mut out = TermMap::new();
    for (jj, m) in w.iter() {
        for (ii, c) in x.iter() {
            if !is_subset(ii, jj) {
                continue;
            }
            let rest = complement(ii, jj);
            let sign = merge_sign(ii, &rest);
            let v = c * m;
            out.insert_signed(rest, if sign < 0 { -v } else { v });
        }
    }
    Form::from_terms(
        w.chart(),
        w.degree() - x.degree(),
        out.0.into_iter(),
    )
}

/// Interior product of an l-form into a k-vector, k ≥ l, defined by
/// `pair(contract_vector(X, w), v) = pair(X, w ∧ v)`.
pub fn contract_vector(x: &Multivector, w: &Form) -> Multivector {
    assert!(
        x.degree() >= w.degree(),
        "contract_vector needs deg X ≥ deg w"
    );
    let mut out = TermMap::new();
    for (ii, c) in x.iter() {
        for (jj, m) in w.iter() {
            if !is_subset(jj, ii) {
                continue;
            }
            let rest = complement(jj, ii);
            let sign = merge_sign(jj, &rest);
            let v = c * m;
            out.insert_signed(rest, if sign < 0 { -v } else { v });
        }
    }
    Multivector::from_terms(
        x.chart(),
        x.degree() - w.degree(),
        out.0.into_iter(),
    )
}

/// Lie bracket of two vector fields.
pub fn lie_bracket(x: &Multivector, y: &Multivector) -> Multivector {
    assert_eq!(x.degree(), 1, "lie_bracket needs vector fields");
    assert_eq!(y.degree(), 1, "lie_bracket needs vector fields");
    let chart = x.chart();
    let mut entries: Vec<(Vec<usize>, Expr)> = Vec::new();
    for j in 0..chart.dim() {
        let yj = y.coeff(&[j]);
        let xj = x.coeff(&[j]);
        let c = x.apply_to_scalar(&yj) - y.apply_to_scalar(&xj);
        if !c.is_zero() {
            entries.push((vec![j], c));
        }
    }
    Multivector::from_terms(chart, 1, entries)
}

/// Wedge a list of vector fields into one multivector.
pub fn decomposable_from_vectors(vs: &[Multivector]) -> Multivector {
    assert!(!vs.is_empty(), "empty wedge has no chart");
    let mut out = vs[0].clone();
    for v in &vs[1..] {
        out = out.wedge(v);
    }
    out
}

/// Factor a degree-n multivector into a wedge of n vector fields, if it is
/// decomposable. The candidate factors are built by contracting away all but
/// one index of a pivot tuple; the wedge of the candidates is then compared
/// against the input, which makes the result a positive certificate: `Some`
/// factors always wedge back to the input exactly.
pub fn factor_decomposable(z: &Multivector) -> Option<Vec<Multivector>> {
    let n = z.degree();
    let chart = z.chart();
    if z.is_zero() {
        return None;
    }
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(vec![z.clone()]);
    }
    // Pivot: prefer a constant coefficient (cheapest later division), else
    // the structurally smallest.
    let (k0, pivot) = z
        .iter()
        .min_by_key(|(idx, c)| (u8::from(!c.is_constant()), (*idx).clone()))
        .map(|(idx, c)| (idx.clone(), c.clone()))?;
    let mut factors: Vec<Multivector> = Vec::with_capacity(n);
    for mu in 1..=n {
        // Wedge of the pivot differentials with slot mu omitted.
        let mut w = Form::scalar(chart, Expr::one());
        for (nu, &j) in k0.iter().enumerate() {
            if nu + 1 == mu {
                continue;
            }
            let dj = Form::from_terms(chart, 1, [(vec![j], Expr::one())]);
            w = w.wedge(&dj);
        }
        let sign_mu = if (n + mu) % 2 == 0 { 1 } else { -1 };
        let mut c_mu = contract_vector(z, &w);
        if sign_mu < 0 {
            c_mu = c_mu.neg();
        }
        factors.push(c_mu);
    }
    // Certificate: the candidates must wedge to pivot^(n-1) times the input.
    let mut lhs = factors[0].clone();
    for f in &factors[1..] {
        lhs = lhs.wedge(f);
    }
    let rhs = z.scale(&pivot.pow_i(n as i64 - 1));
    if lhs != rhs {
        return None;
    }
    // Rescale so the factors wedge to the input itself.
    for f in factors.iter_mut().skip(1) {
        *f = f.scale(&pivot.recip());
    }
    Some(factors)
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (i, (idx, c)) in self.terms.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if idx.is_empty() {
                write!(f, "{c}")?;
                continue;
            }
            if c.is_one() {
                // bare wedge
            } else {
                write!(f, "({c}) ")?;
            }
            for (j, k) in idx.iter().enumerate() {
                if j > 0 {
                    write!(f, "∧")?;
                }
                write!(f, "∂{}", self.chart.name(*k))?;
            }
        }
        Ok(())
    }
}
