//! Differential forms with exact symbolic coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use symcore::Expr;

use crate::chart::Chart;
use crate::terms::TermMap;

/// A degree-p differential form on a chart: a sparse map from strictly
/// increasing p-tuples of coordinate indices to coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    chart: Arc<Chart>,
    degree: usize,
    pub(crate) terms: TermMap,
}

impl Form {
    pub fn zero(chart: &Arc<Chart>, degree: usize) -> Form {
        Form {
            chart: chart.clone(),
            degree,
            terms: TermMap::new(),
        }
    }

    /// A degree-0 form (a function).
    pub fn scalar(chart: &Arc<Chart>, value: Expr) -> Form {
        let mut terms = TermMap::new();
        terms.insert_signed(Vec::new(), value);
        Form {
            chart: chart.clone(),
            degree: 0,
            terms,
        }
    }

    /// The coordinate differential `d q_i`.
    pub fn coordinate(chart: &Arc<Chart>, name: &str) -> Form {
        let i = chart.expect_index(name);
        let mut terms = TermMap::new();
        terms.insert_signed(vec![i], Expr::one());
        Form {
            chart: chart.clone(),
            degree: 1,
            terms,
        }
    }

    /// Build from (index tuple, coefficient) pairs; tuples may be unsorted
    /// and signs are folded in.
    pub fn from_terms(
        chart: &Arc<Chart>,
        degree: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Expr)>,
    ) -> Form {
        let mut terms = TermMap::new();
        for (idx, c) in entries {
            assert_eq!(idx.len(), degree, "index tuple of wrong length");
            for &i in &idx {
                assert!(i < chart.dim(), "coordinate index out of range");
            }
            terms.insert_signed(idx, c);
        }
        Form {
            chart: chart.clone(),
            degree,
            terms,
        }
    }

    /// Wedge of coordinate differentials named in order.
    pub fn wedge_of(chart: &Arc<Chart>, names: &[&str]) -> Form {
        let idx: Vec<usize> = names.iter().map(|n| chart.expect_index(n)).collect();
        Form::from_terms(chart, names.len(), [(idx, Expr::one())])
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

    /// Coefficient at a (sorted) index tuple.
    pub fn coeff(&self, idx: &[usize]) -> Expr {
        self.terms.0.get(idx).cloned().unwrap_or_else(Expr::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Expr)> {
        self.terms.0.iter()
    }

    pub fn terms_map(&self) -> &BTreeMap<Vec<usize>, Expr> {
        &self.terms.0
    }

    /// Value of a degree-0 form.
    pub fn as_scalar(&self) -> Expr {
        assert_eq!(self.degree, 0, "as_scalar on a form of positive degree");
        self.coeff(&[])
    }

    pub fn add(&self, other: &Form) -> Form {
        self.assert_compatible(other);
        Form {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self.terms.add(&other.terms),
        }
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        Form {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self.terms.neg(),
        }
    }

    pub fn scale(&self, s: &Expr) -> Form {
        Form {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self.terms.scale(s),
        }
    }

    pub fn wedge(&self, other: &Form) -> Form {
        assert!(
            Arc::ptr_eq(&self.chart, &other.chart) || self.chart == other.chart,
            "wedge of forms on different charts"
        );
        Form {
            chart: self.chart.clone(),
            degree: self.degree + other.degree,
            terms: self.terms.wedge(&other.terms),
        }
    }

    /// Exterior derivative.
    pub fn d(&self) -> Form {
        let mut terms = TermMap::new();
        for (idx, c) in &self.terms.0 {
            for m in 0..self.chart.dim() {
                let dc = c.diff(self.chart.name(m));
                if dc.is_zero() {
                    continue;
                }
                let mut key = Vec::with_capacity(idx.len() + 1);
                key.push(m);
                key.extend_from_slice(idx);
                terms.insert_signed(key, dc);
            }
        }
        Form {
            chart: self.chart.clone(),
            degree: self.degree + 1,
            terms,
        }
    }

    /// Apply a map to every coefficient (substitution, evaluation, rewriting).
    pub fn map_coeffs(&self, f: impl Fn(&Expr) -> Expr) -> Form {
        Form {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self.terms.map_coeffs(&f),
        }
    }

    fn assert_compatible(&self, other: &Form) {
        assert_eq!(self.degree, other.degree, "forms of different degree");
        assert!(
            Arc::ptr_eq(&self.chart, &other.chart) || self.chart == other.chart,
            "forms on different charts"
        );
    }
}

impl fmt::Display for Form {
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
                write!(f, "d{}", self.chart.name(*k))?;
            }
        }
        Ok(())
    }
}
