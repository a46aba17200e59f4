//! Sparse polynomials in `a_1, ..., a_n`, where `a_j` carries weight `j`.
//!
//! Terms are keyed by [`Monomial`], whose `Ord` is the weighted degree
//! reverse lexicographic order; the last key of a polynomial is therefore
//! its leading monomial.

mod generic;
mod groebner;
mod order;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use smallvec::SmallVec;

use crate::arith::{IntegralDomain, Ring};
use crate::unipoly::UniPoly;

pub use generic::{generic_polynomial, generic_resultant, SymbolicLimits};
pub use groebner::{
    buchberger_is_gb, normal_form, s_polynomial, GbBudget, GbCertificate, PairOutcome,
};
pub use order::{is_weighted_homogeneous, leading_monomial, Homogeneity, WeightedOrder};

/// Exponent vector with its cached weighted degree `sum (j+1) * e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
    wdeg: u32,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        let wdeg = exps
            .iter()
            .enumerate()
            .map(|(j, &e)| (j as u32 + 1) * e as u32)
            .sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            wdeg,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            wdeg: 0,
        }
    }

    /// The variable `a_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial::new(&exps)
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn weighted_degree(&self) -> u32 {
        self.wdeg
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.wdeg == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            wdeg: self.wdeg + other.wdeg,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.wdeg <= other.wdeg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            wdeg: self.wdeg - other.wdeg,
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(&exps)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    fn write_with(
        &self,
        f: &mut fmt::Formatter<'_>,
        names: &dyn Fn(usize) -> String,
    ) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&names(j))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Weighted degree first; on a tie, the monomial with the smaller exponent
/// at the first differing variable is larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.wdeg.cmp(&other.wdeg).then_with(|| {
            self.exps
                .iter()
                .zip(&other.exps)
                .find(|(a, b)| a != b)
                .map_or(Ordering::Equal, |(a, b)| b.cmp(a))
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &default_name)
    }
}

fn default_name(j: usize) -> String {
    format!("a{}", j + 1)
}

/// A polynomial over `R` in a fixed number of variables. No stored
/// coefficient is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<R: Ring> {
    ring: R,
    nvars: usize,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(ring: R, nvars: usize) -> Self {
        MultiPoly {
            ring,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: R, nvars: usize, c: R::Elem) -> Self {
        Self::term(ring, Monomial::one(nvars), c)
    }

    pub fn one(ring: R, nvars: usize) -> Self {
        let one = ring.one();
        Self::constant(ring, nvars, one)
    }

    /// The variable `a_{index+1}`.
    pub fn var(ring: R, nvars: usize, index: usize) -> Self {
        let one = ring.one();
        Self::term(ring, Monomial::var(nvars, index), one)
    }

    pub fn term(ring: R, m: Monomial, c: R::Elem) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !ring.is_zero(&c) {
            terms.insert(m, c);
        }
        MultiPoly { ring, nvars, terms }
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(
        ring: R,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, R::Elem)>,
    ) -> Self {
        let mut poly = Self::zero(ring, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has wrong variable count");
            poly.add_term(m, &c);
        }
        poly
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &R::Elem)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> R::Elem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &R::Elem)> {
        self.terms.last_key_value()
    }

    pub fn add_term(&mut self, m: Monomial, c: &R::Elem) {
        use std::collections::btree_map::Entry;
        if self.ring.is_zero(c) {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = self.ring.add(o.get(), c);
                if self.ring.is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.ring.mul(a, c)));
        Self::from_sorted(self.ring.clone(), self.nvars, terms)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &R::Elem) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(u, a)| (u.mul(m), self.ring.mul(a, c)));
        Self::from_sorted(self.ring.clone(), self.nvars, terms)
    }

    // Multiplying every key by one monomial preserves the order.
    fn from_sorted(
        ring: R,
        nvars: usize,
        terms: impl Iterator<Item = (Monomial, R::Elem)>,
    ) -> Self {
        let terms = terms.filter(|(_, c)| !ring.is_zero(c)).collect();
        MultiPoly { ring, nvars, terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.ring.neg(c)))
            .collect();
        MultiPoly {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &self.ring.neg(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let ring = &self.ring;
        if self.is_zero() || other.is_zero() {
            return Self::zero(ring.clone(), self.nvars);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms.iter().next().unwrap();
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, R::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let prod = ring.mul(a, b);
                acc.entry(u.mul(v))
                    .and_modify(|s| *s = ring.add(s, &prod))
                    .or_insert(prod);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !ring.is_zero(c)).collect();
        MultiPoly {
            ring: ring.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.ring.clone(), self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Value at the point `values` (one entry per variable).
    pub fn eval(&self, values: &[R::Elem]) -> R::Elem {
        assert_eq!(values.len(), self.nvars, "wrong number of values");
        let ring = &self.ring;
        let mut sum = ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(m.exps()) {
                if e > 0 {
                    t = ring.mul(&t, &ring.pow(v, e as u64));
                }
            }
            sum = ring.add(&sum, &t);
        }
        sum
    }

    /// Substitutes `value` for the variable `index`; the variable count is kept.
    pub fn substitute(&self, index: usize, value: &R::Elem) -> Self {
        let ring = &self.ring;
        let mut out = Self::zero(ring.clone(), self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps()[index];
            let mut exps = m.exps().to_vec();
            exps[index] = 0;
            out.add_term(
                Monomial::new(&exps),
                &ring.mul(c, &ring.pow(value, e as u64)),
            );
        }
        out
    }

    /// The univariate polynomial in variable `index`; `None` if another
    /// variable occurs.
    pub fn to_univariate(&self, index: usize) -> Option<UniPoly<R>> {
        let mut coeffs: Vec<R::Elem> = Vec::new();
        for (m, c) in &self.terms {
            if m.exps()
                .iter()
                .enumerate()
                .any(|(j, &e)| j != index && e > 0)
            {
                return None;
            }
            let e = m.exps()[index] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, self.ring.zero());
            }
            coeffs[e] = c.clone();
        }
        Some(UniPoly::new(self.ring.clone(), coeffs))
    }

    /// Coefficientwise image in another ring.
    pub fn map<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> MultiPoly<S> {
        let mut out = MultiPoly::zero(target, self.nvars);
        for (m, c) in &self.terms {
            let image = f(c);
            if !out.ring.is_zero(&image) {
                out.terms.insert(m.clone(), image);
            }
        }
        out
    }

    /// Image under the canonical map from `Z`, e.g. reduction mod `p`.
    pub fn reduce<S: Ring>(&self, target: S) -> MultiPoly<S>
    where
        R: Ring<Elem = BigInt>,
    {
        let t = target.clone();
        self.map(target, move |c| t.from_bigint(c))
    }

    /// Canonical text with caller-supplied variable names.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        Named { poly: self, names }
    }

    fn write_with(
        &self,
        f: &mut fmt::Formatter<'_>,
        names: &dyn Fn(usize) -> String,
    ) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let text = self.ring.format_elem(c);
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            let magnitude = if magnitude.bytes().all(|b| b.is_ascii_digit()) {
                magnitude
            } else {
                format!("({magnitude})")
            };
            match (k == 0, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            f.write_str(&magnitude)?;
            if !m.is_one() {
                f.write_str("*")?;
                m.write_with(f, names)?;
            }
        }
        Ok(())
    }
}

struct Named<'a, R: Ring> {
    poly: &'a MultiPoly<R>,
    names: &'a [&'a str],
}

impl<R: Ring> fmt::Display for Named<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.write_with(f, &|j| self.names[j].to_string())
    }
}

/// Descending terms with explicit coefficients, e.g. `1*a2^3 + 2*a1^2*a2^2`.
impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &default_name)
    }
}

impl<R: IntegralDomain> MultiPoly<R> {
    /// `self / divisor` when the division is exact in `R[a]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let ring = &self.ring;
        let (lm, lc) = divisor.leading_term()?;
        if divisor.terms.len() == 1 {
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| Some((m.div(lm)?, ring.div_exact(c, lc)?)))
                .collect::<Option<BTreeMap<_, _>>>()?;
            return Some(MultiPoly {
                ring: ring.clone(),
                nvars: self.nvars,
                terms,
            });
        }
        let mut rem = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some((m, c)) = rem.terms.pop_last() {
            let qm = m.div(lm)?;
            let qc = ring.div_exact(&c, lc)?;
            let neg = ring.neg(&qc);
            // the leading terms cancel exactly, so skip the divisor's last term
            for (u, b) in divisor.terms.iter().rev().skip(1) {
                rem.add_term(u.mul(&qm), &ring.mul(&neg, b));
            }
            quotient.insert(qm, qc);
        }
        Some(MultiPoly {
            ring: ring.clone(),
            nvars: self.nvars,
            terms: quotient,
        })
    }
}

/// `R[a_1, ..., a_n]` as a ring context.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiRing<R: Ring> {
    base: R,
    nvars: usize,
}

impl<R: Ring> MultiRing<R> {
    pub fn new(base: R, nvars: usize) -> Self {
        MultiRing { base, nvars }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn var(&self, index: usize) -> MultiPoly<R> {
        MultiPoly::var(self.base.clone(), self.nvars, index)
    }

    pub fn constant(&self, c: R::Elem) -> MultiPoly<R> {
        MultiPoly::constant(self.base.clone(), self.nvars, c)
    }
}

impl<R: Ring> Ring for MultiRing<R> {
    type Elem = MultiPoly<R>;

    fn zero(&self) -> MultiPoly<R> {
        MultiPoly::zero(self.base.clone(), self.nvars)
    }

    fn one(&self) -> MultiPoly<R> {
        MultiPoly::one(self.base.clone(), self.nvars)
    }

    fn is_zero(&self, a: &MultiPoly<R>) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &MultiPoly<R>, b: &MultiPoly<R>) -> MultiPoly<R> {
        a.add(b)
    }

    fn sub(&self, a: &MultiPoly<R>, b: &MultiPoly<R>) -> MultiPoly<R> {
        a.sub(b)
    }

    fn neg(&self, a: &MultiPoly<R>) -> MultiPoly<R> {
        a.neg()
    }

    fn mul(&self, a: &MultiPoly<R>, b: &MultiPoly<R>) -> MultiPoly<R> {
        a.mul(b)
    }

    fn from_bigint(&self, n: &BigInt) -> MultiPoly<R> {
        self.constant(self.base.from_bigint(n))
    }

    fn characteristic(&self) -> BigUint {
        self.base.characteristic()
    }

    fn format_elem(&self, a: &MultiPoly<R>) -> String {
        a.to_string()
    }

    fn is_one(&self, a: &MultiPoly<R>) -> bool {
        a.terms.len() == 1
            && a.terms
                .iter()
                .all(|(m, c)| m.is_one() && self.base.is_one(c))
    }

    fn size_hint(&self, a: &MultiPoly<R>) -> usize {
        a.terms.len()
    }
}

impl<R: IntegralDomain> IntegralDomain for MultiRing<R> {
    fn div_exact(&self, a: &MultiPoly<R>, b: &MultiPoly<R>) -> Option<MultiPoly<R>> {
        a.div_exact(b)
    }
}
