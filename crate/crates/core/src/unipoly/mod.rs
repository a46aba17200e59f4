//! Dense univariate polynomials over any coefficient ring.

mod derivative;
mod descend;
mod euclid;
mod resultant;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Ring;

pub use descend::{descend, is_linear_power};
pub use resultant::{resultant, resultant_prs, sylvester_matrix};

/// `c_0 + c_1 X + ... + c_n X^n`, stored lowest degree first with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Self {
        let mut poly = UniPoly { ring, coeffs };
        poly.trim();
        poly
    }

    /// Coefficients given highest degree first.
    pub fn from_high_first(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        coeffs.reverse();
        Self::new(ring, coeffs)
    }

    pub fn from_i64s(ring: R, low_first: &[i64]) -> Self {
        let coeffs = low_first.iter().map(|&c| ring.from_i64(c)).collect();
        Self::new(ring, coeffs)
    }

    pub fn zero(ring: R) -> Self {
        UniPoly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::new(ring, vec![one])
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    pub fn x(ring: R) -> Self {
        Self::monomial(ring.clone(), ring.one(), 1)
    }

    /// `c X^n`.
    pub fn monomial(ring: R, c: R::Elem, n: usize) -> Self {
        let mut coeffs = vec![ring.zero(); n];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.ring.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `X^e`, zero beyond the degree.
    pub fn coeff(&self, e: usize) -> R::Elem {
        self.coeffs
            .get(e)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn leading_coeff(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| self.ring.is_one(c))
    }

    /// Exponents carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(e, _)| e)
    }

    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let ring = &self.ring;
        self.coeffs
            .iter()
            .rev()
            .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// Multiplication by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ring.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ring.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficientwise image in another ring.
    pub fn map<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> UniPoly<S> {
        let coeffs = self.coeffs.iter().map(f).collect();
        UniPoly::new(target, coeffs)
    }

    /// Composition `self(other)` by Horner's rule.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero(self.ring.clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Self::constant(self.ring.clone(), c.clone());
        }
        acc
    }
}

impl<R: Ring> Add for &UniPoly<R> {
    type Output = UniPoly<R>;

    fn add(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        let ring = &self.ring;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|e| match (self.coeffs.get(e), rhs.coeffs.get(e)) {
                (Some(a), Some(b)) => ring.add(a, b),
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        UniPoly::new(ring.clone(), coeffs)
    }
}

impl<R: Ring> Neg for &UniPoly<R> {
    type Output = UniPoly<R>;

    fn neg(self) -> UniPoly<R> {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        UniPoly {
            ring: self.ring.clone(),
            coeffs,
        }
    }
}

impl<R: Ring> Sub for &UniPoly<R> {
    type Output = UniPoly<R>;

    fn sub(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        self + &(-rhs)
    }
}

impl<R: Ring> Mul for &UniPoly<R> {
    type Output = UniPoly<R>;

    fn mul(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        let ring = &self.ring;
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(ring.clone());
        }
        let mut coeffs = vec![ring.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = ring.add(&coeffs[i + j], &ring.mul(a, b));
            }
        }
        UniPoly::new(ring.clone(), coeffs)
    }
}

/// Writes `X^3 + 2*X - 1` style text, highest degree first. Coefficients
/// that are not plain integers are parenthesized.
impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            let text = self.ring.format_elem(c);
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) if is_integer_literal(rest) => (true, rest.to_string()),
                _ => (false, text),
            };
            let magnitude = if is_integer_literal(&magnitude) {
                magnitude
            } else {
                format!("({magnitude})")
            };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match e {
                0 => String::new(),
                1 => "X".into(),
                _ => format!("X^{e}"),
            };
            match (var.is_empty(), magnitude.as_str()) {
                (true, m) => f.write_str(m)?,
                (false, "1") => f.write_str(&var)?,
                (false, m) => write!(f, "{m}*{var}")?,
            }
        }
        Ok(())
    }
}

fn is_integer_literal(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integers, PrimeField};

    #[test]
    fn canonical_form_trims() {
        let z = Integers::new();
        let p = UniPoly::from_i64s(z, &[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(UniPoly::from_i64s(z, &[0, 0]).degree(), None);
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(UniPoly::from_i64s(f5, &[1, 5]).degree(), Some(0));
    }

    #[test]
    fn display() {
        let z = Integers::new();
        assert_eq!(
            UniPoly::from_i64s(z, &[-1, 0, 2, 1]).to_string(),
            "X^3 + 2*X^2 - 1"
        );
        assert_eq!(UniPoly::from_i64s(z, &[0, -1]).to_string(), "-X");
        assert_eq!(UniPoly::zero(z).to_string(), "0");
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(
            UniPoly::from_i64s(f5, &[0, 0, 0, 0, 0, -1, 1]).to_string(),
            "X^6 + 4*X^5"
        );
    }

    #[test]
    fn arithmetic() {
        let z = Integers::new();
        let a = UniPoly::from_i64s(z, &[1, 1]);
        let b = UniPoly::from_i64s(z, &[-1, 1]);
        assert_eq!(&a * &b, UniPoly::from_i64s(z, &[-1, 0, 1]));
        assert_eq!(&a - &a, UniPoly::zero(z));
        assert_eq!(a.pow(3), UniPoly::from_i64s(z, &[1, 3, 3, 1]));
        assert_eq!(a.compose(&b), UniPoly::from_i64s(z, &[0, 1]));
        assert_eq!(a.eval(&z.from_i64(4)), z.from_i64(5));
    }
}
