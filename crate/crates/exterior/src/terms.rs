//! Shared coefficient-map algebra behind forms and multivectors.

use std::collections::BTreeMap;

use symcore::Expr;

use crate::sign::sort_signed;

/// Sparse alternating coefficient map keyed by strictly increasing index
/// tuples. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct TermMap(pub(crate) BTreeMap<Vec<usize>, Expr>);

impl TermMap {
    pub(crate) fn new() -> Self {
        TermMap(BTreeMap::new())
    }

    /// Add `coeff` at a possibly unsorted index tuple, folding in the
    /// permutation sign; repeated indices contribute nothing.
    pub(crate) fn insert_signed(&mut self, idx: Vec<usize>, coeff: Expr) {
        if coeff.is_zero() {
            return;
        }
        let Some((sorted, sign)) = sort_signed(idx) else {
            return;
        };
        let signed = if sign < 0 { -coeff } else { coeff };
        use std::collections::btree_map::Entry;
        match self.0.entry(sorted) {
            Entry::Vacant(e) => {
                e.insert(signed);
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + &signed;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub(crate) fn add(&self, other: &TermMap) -> TermMap {
        let mut out = self.clone();
        for (k, v) in &other.0 {
            out.insert_signed(k.clone(), v.clone());
        }
        out
    }

    pub(crate) fn neg(&self) -> TermMap {
        TermMap(self.0.iter().map(|(k, v)| (k.clone(), -v)).collect())
    }

    pub(crate) fn scale(&self, s: &Expr) -> TermMap {
        if s.is_zero() {
            return TermMap::new();
        }
        TermMap(self.0.iter().map(|(k, v)| (k.clone(), s * v)).collect())
    }

    pub(crate) fn wedge(&self, other: &TermMap) -> TermMap {
        let mut out = TermMap::new();
        for (i, a) in &self.0 {
            for (j, b) in &other.0 {
                let mut key = i.clone();
                key.extend_from_slice(j);
                out.insert_signed(key, a * b);
            }
        }
        out
    }

    pub(crate) fn map_coeffs(&self, f: &impl Fn(&Expr) -> Expr) -> TermMap {
        let mut out = TermMap::new();
        for (k, v) in &self.0 {
            out.insert_signed(k.clone(), f(v));
        }
        out
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}
