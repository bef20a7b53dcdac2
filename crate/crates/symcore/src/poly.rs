//! Sparse multivariate polynomials over exact rationals.
//!
//! Monomials map atoms to positive exponents; polynomials map monomials to
//! nonzero coefficients. The graded-lexicographic order (total degree first,
//! then exponents along ascending atoms) drives leading-term extraction,
//! exact division, and the primitive-PRS gcd that keeps quotients canonical.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::atom::Atom;

/// Product of atom powers; the empty monomial is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(pub BTreeMap<Atom, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn atom(a: Atom) -> Self {
        let mut m = BTreeMap::new();
        m.insert(a, 1);
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.values().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (a, e) in &other.0 {
            *out.entry(a.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    /// Exact monomial quotient; `None` when some exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for (a, e) in &other.0 {
            let have = out.get_mut(a)?;
            if *have < *e {
                return None;
            }
            *have -= e;
            if *have == 0 {
                out.remove(a);
            }
        }
        Some(Monomial(out))
    }

    /// Graded-lexicographic comparison: total degree first, then the first
    /// differing exponent along ascending atoms (larger exponent wins).
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut it_a = self.0.iter();
        let mut it_b = other.0.iter();
        let mut cur_a = it_a.next();
        let mut cur_b = it_b.next();
        loop {
            match (cur_a, cur_b) {
                (None, None) => return Ordering::Equal,
                // A missing atom counts as exponent zero, so the side
                // carrying the earlier atom has the larger exponent there.
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((aa, ea)), Some((ab, eb))) => match aa.cmp(ab) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            cur_a = it_a.next();
                            cur_b = it_b.next();
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

/// Sparse polynomial with exact rational coefficients; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Poly(pub BTreeMap<Monomial, BigRational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Monomial::one(), c);
        }
        Poly(m)
    }

    pub fn atom(a: Atom) -> Self {
        let mut m = BTreeMap::new();
        m.insert(Monomial::atom(a), BigRational::one());
        Poly(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_empty() || (self.0.len() == 1 && self.0.keys().next().unwrap().is_one())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.0.is_empty() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return Some(self.0.values().next().unwrap().clone());
        }
        None
    }

    fn insert_term(map: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match map.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.0.clone();
        for (m, c) in &other.0 {
            Self::insert_term(&mut out, m.clone(), c.clone());
        }
        Poly(out)
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|(m, c)| (m.clone(), -c.clone())).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = BTreeMap::new();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &other.0 {
                Self::insert_term(&mut out, ma.mul(mb), ca * cb);
            }
        }
        Poly(out)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|(m, k)| (m.clone(), k * c)).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Leading term under graded-lex; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.0
            .iter()
            .max_by(|(ma, _), (mb, _)| ma.grlex_cmp(mb))
    }

    /// Divide every coefficient by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, lc)) => {
                let inv = BigRational::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Exact multivariate division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "exact_div by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.as_constant() {
            let inv = BigRational::one() / c;
            return Some(self.scale(&inv));
        }
        let (dm, dc) = d.leading().expect("nonzero divisor has leading term");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().expect("nonzero remainder");
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let term = Poly(BTreeMap::from([(qm, qc)]));
            quo = quo.add(&term);
            rem = rem.sub(&term.mul(d));
        }
        Some(quo)
    }

    /// Every atom occurring in some monomial.
    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.0.keys().flat_map(|m| m.0.keys())
    }

    pub fn contains_atom(&self, a: &Atom) -> bool {
        self.0.keys().any(|m| m.0.contains_key(a))
    }

    pub fn max_atom(&self) -> Option<&Atom> {
        self.atoms().max()
    }

    /// Degree in a single atom.
    pub fn degree_in(&self, a: &Atom) -> u32 {
        self.0
            .keys()
            .map(|m| m.0.get(a).copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// View as a univariate polynomial in `x`: coefficients by `x`-degree,
    /// each a polynomial free of `x`.
    pub fn univariate_in(&self, x: &Atom) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.0 {
            let e = m.0.get(x).copied().unwrap_or(0);
            let mut rest = m.clone();
            rest.0.remove(x);
            let entry = out.entry(e).or_insert_with(Poly::zero);
            let mut term = BTreeMap::new();
            term.insert(rest, c.clone());
            *entry = entry.add(&Poly(term));
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    fn from_univariate(x: &Atom, coeffs: BTreeMap<u32, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (e, p) in coeffs {
            let xe = Poly::atom(x.clone()).pow(e);
            out = out.add(&p.mul(&xe));
        }
        out
    }

    fn lead_in(&self, x: &Atom) -> (u32, Poly) {
        let uni = self.univariate_in(x);
        let (&e, p) = uni.iter().next_back().expect("nonzero polynomial");
        (e, p.clone())
    }

    /// Gcd of the coefficient numerators over the lcm of the coefficient
    /// denominators. Dividing by it leaves coprime integer coefficients.
    fn rational_content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.0.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        BigRational::new(num, den)
    }

    /// Divide out the rational content; the zero polynomial is unchanged.
    fn primitive_rational(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = BigRational::one() / self.rational_content();
        self.scale(&inv)
    }

    /// Pseudo-remainder of `self` by `d` as univariate polynomials in `x`,
    /// returned up to a positive rational factor. Intermediate scalings by
    /// the divisor's leading coefficient keep the computation fraction-free,
    /// and the rational content is dropped after each step so the integer
    /// arithmetic stays small.
    fn pseudo_rem(&self, d: &Poly, x: &Atom) -> Poly {
        let (dd, dlc) = d.lead_in(x);
        let mut r = self.clone();
        while !r.is_zero() {
            let (rd, rlc) = r.lead_in(x);
            if rd < dd {
                break;
            }
            let shift = Poly::atom(x.clone()).pow(rd - dd);
            r = r
                .mul(&dlc)
                .sub(&d.mul(&rlc).mul(&shift))
                .primitive_rational();
        }
        r
    }

    /// Content with respect to `x`: gcd of the univariate coefficients.
    fn content_in(&self, x: &Atom) -> Poly {
        let uni = self.univariate_in(x);
        let mut acc = Poly::zero();
        for p in uni.values() {
            acc = poly_gcd(&acc, p);
            if acc.is_constant() && !acc.is_zero() {
                return Poly::one();
            }
        }
        acc
    }

    /// Content with respect to a set of atoms: view the polynomial as a
    /// polynomial in those atoms and take the gcd of its coefficients,
    /// which are free of them.
    fn content_wrt(&self, atoms: &BTreeSet<Atom>) -> Poly {
        let mut groups: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.0 {
            let mut outer = BTreeMap::new();
            let mut inner = BTreeMap::new();
            for (a, e) in &m.0 {
                if atoms.contains(a) {
                    outer.insert(a.clone(), *e);
                } else {
                    inner.insert(a.clone(), *e);
                }
            }
            let entry = groups.entry(Monomial(outer)).or_insert_with(Poly::zero);
            *entry = entry.add(&Poly(BTreeMap::from([(Monomial(inner), c.clone())])));
        }
        let coeffs: Vec<Poly> = groups.into_values().collect();
        poly_gcd_many(&coeffs)
    }
}

/// Monic gcd of two polynomials (primitive PRS, recursing on the largest
/// atom). Returns 1 for coprime inputs; gcd(0, p) is monic(p).
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }

    // The gcd divides both inputs, so it only involves atoms common to
    // both. Atoms appearing on one side only are dropped up front by
    // taking the content with respect to them, which keeps the remainder
    // sequence in as few variables as possible.
    let atoms_a: BTreeSet<Atom> = a.atoms().cloned().collect();
    let atoms_b: BTreeSet<Atom> = b.atoms().cloned().collect();
    let only_a: BTreeSet<Atom> = atoms_a.difference(&atoms_b).cloned().collect();
    let only_b: BTreeSet<Atom> = atoms_b.difference(&atoms_a).cloned().collect();
    if !only_a.is_empty() || !only_b.is_empty() {
        let ra = if only_a.is_empty() {
            a.clone()
        } else {
            a.content_wrt(&only_a)
        };
        let rb = if only_b.is_empty() {
            b.clone()
        } else {
            b.content_wrt(&only_b)
        };
        // Each content may itself drop further atoms, so recurse; the set
        // of atoms involved shrinks strictly, ensuring termination.
        return poly_gcd(&ra, &rb);
    }

    // Both operands now carry the same atoms, so the main variable occurs
    // in both with positive degree.
    let x = a
        .max_atom()
        .expect("nonconstant polynomials have atoms")
        .clone();
    let ca = a.content_in(&x);
    let cb = b.content_in(&x);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let c = poly_gcd(&ca, &cb);

    let da = pa.degree_in(&x);
    let db = pb.degree_in(&x);
    let (f, g) = if da >= db { (pa, pb) } else { (pb, pa) };
    let mut f = f.primitive_rational();
    let mut g = g.primitive_rational();
    loop {
        let r = f.pseudo_rem(&g, &x);
        if r.is_zero() {
            let pg = g.exact_div(&g.content_in(&x)).expect("content divides");
            return c.mul(&pg).monic();
        }
        if r.degree_in(&x) == 0 {
            // A nonzero x-free remainder forces the gcd of the primitive
            // parts to be trivial.
            return c.monic();
        }
        let rc = r.content_in(&x);
        f = g;
        g = r.exact_div(&rc).expect("content divides");
    }
}

/// Gcd of a slice; zero slice gives 0.
pub fn poly_gcd_many(ps: &[Poly]) -> Poly {
    let mut acc = Poly::zero();
    for p in ps {
        acc = poly_gcd(&acc, p);
        if acc.is_constant() && !acc.is_zero() {
            return Poly::one();
        }
    }
    acc
}

#[allow(dead_code)]
fn _assert_from_univariate_used(x: &Atom, c: BTreeMap<u32, Poly>) -> Poly {
    Poly::from_univariate(x, c)
}
