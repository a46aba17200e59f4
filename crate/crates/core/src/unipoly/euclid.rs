use super::UniPoly;
use crate::arith::{Field, IntegralDomain};

impl<F: Field> UniPoly<F> {
    /// Quotient and remainder; panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let ring = &self.ring;
        let lead = divisor
            .leading_coeff()
            .expect("division by zero polynomial");
        let lead_inv = ring.inv(lead).expect("nonzero leading coefficient");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(ring.clone()), self.clone());
        }
        let mut quot = vec![ring.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = ring.mul(&rem[k + dd], &lead_inv);
            if ring.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = ring.sub(&rem[k + j], &ring.mul(&c, d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(ring.clone(), quot), Self::new(ring.clone(), rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&self.ring.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd, with `gcd(P, 0) = monic(P)` and `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::one(self.ring.clone()).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus);
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus);
            }
        }
        acc
    }
}

impl<R: IntegralDomain> UniPoly<R> {
    /// Pseudo-remainder: `lc(divisor)^(deg self - deg divisor + 1) * self mod divisor`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let ring = &self.ring;
        let lead = divisor
            .leading_coeff()
            .expect("division by zero polynomial")
            .clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.clone();
        }
        let steps = rem.len() - dd;
        for k in (0..steps).rev() {
            let top = rem[k + dd].clone();
            for c in rem.iter_mut().take(k + dd) {
                *c = ring.mul(c, &lead);
            }
            for (j, d) in divisor.coeffs.iter().enumerate().take(dd) {
                rem[k + j] = ring.sub(&rem[k + j], &ring.mul(&top, d));
            }
            rem.truncate(k + dd);
        }
        Self::new(ring.clone(), rem)
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_exact_scalar(&self, c: &R::Elem) -> Option<Self> {
        let ring = &self.ring;
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| ring.div_exact(a, c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(ring.clone(), coeffs))
    }
}
