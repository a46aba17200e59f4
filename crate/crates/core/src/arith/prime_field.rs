//! Prime fields `F_p`.
//!
//! Moduli below `2^32` use native 64-bit products. Moduli in `[2^32, 2^62)`
//! use Montgomery multiplication with `R = 2^64`, so every product fits a
//! 128-bit accumulator. Larger primes go through [`BigPrimeField`].

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::ToPrimitive;

use super::descriptor::FieldDescriptor;
use super::number_theory::{inv_mod, is_prime, Prime};
use super::ring::{Field, FiniteField, IntegralDomain, Ring};
use crate::error::{Error, Result};

/// Largest modulus (exclusive) handled by [`PrimeField`].
pub const FAST_PATH_LIMIT: u64 = 1 << 62;
const NATIVE_LIMIT: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Reduction {
    Native,
    Montgomery { p_neg_inv: u64, r2: u64 },
}

/// `F_p` for `p < 2^62`. Elements are `u64` representatives in `[0, p)`;
/// above `2^32` the representative is the Montgomery form, so use
/// [`PrimeField::from_u64`] / [`PrimeField::to_u64`] to convert.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    reduction: Reduction,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        let prime = Prime::new(p)?;
        Self::from_prime(prime)
    }

    pub fn from_prime(p: Prime) -> Result<Self> {
        let p = p.get();
        if p >= FAST_PATH_LIMIT {
            return Err(Error::domain(format!(
                "modulus {p} exceeds the word-size fast path; use BigPrimeField"
            )));
        }
        let reduction = if p < NATIVE_LIMIT {
            Reduction::Native
        } else {
            // Newton iteration for p^{-1} mod 2^64 (p odd).
            let mut inv: u64 = 1;
            for _ in 0..6 {
                inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
            }
            let r = ((1u128 << 64) % p as u128) as u64;
            let r2 = ((r as u128 * r as u128) % p as u128) as u64;
            Reduction::Montgomery {
                p_neg_inv: inv.wrapping_neg(),
                r2,
            }
        };
        Ok(PrimeField { p, reduction })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn redc(&self, t: u128, p_neg_inv: u64) -> u64 {
        let m = (t as u64).wrapping_mul(p_neg_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    /// Element with canonical residue `n mod p`.
    #[inline]
    pub fn from_u64(&self, n: u64) -> u64 {
        let n = n % self.p;
        match self.reduction {
            Reduction::Native => n,
            Reduction::Montgomery { p_neg_inv, r2 } => self.redc(n as u128 * r2 as u128, p_neg_inv),
        }
    }

    /// Canonical residue in `[0, p)`.
    #[inline]
    pub fn to_u64(&self, a: u64) -> u64 {
        match self.reduction {
            Reduction::Native => a,
            Reduction::Montgomery { p_neg_inv, .. } => self.redc(a as u128, p_neg_inv),
        }
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        self.from_u64(1)
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        match self.reduction {
            Reduction::Native => a * b % self.p,
            Reduction::Montgomery { p_neg_inv, .. } => {
                self.redc(*a as u128 * *b as u128, p_neg_inv)
            }
        }
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        let r = n.magnitude() % self.p;
        let r = self.from_u64(r.to_u64().expect("residue below modulus"));
        if n.sign() == Sign::Minus {
            self.neg(&r)
        } else {
            r
        }
    }

    fn from_i64(&self, n: i64) -> u64 {
        let r = self.from_u64(n.unsigned_abs());
        if n < 0 {
            self.neg(&r)
        } else {
            r
        }
    }

    fn from_u64(&self, n: u64) -> u64 {
        PrimeField::from_u64(self, n)
    }

    fn characteristic(&self) -> BigUint {
        BigUint::from(self.p)
    }

    fn format_elem(&self, a: &u64) -> String {
        self.to_u64(*a).to_string()
    }
}

impl IntegralDomain for PrimeField {
    fn div_exact(&self, a: &u64, b: &u64) -> Option<u64> {
        self.div(a, b)
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        inv_mod(self.to_u64(*a), self.p).map(|x| self.from_u64(x))
    }

    fn frobenius_root(&self, a: &u64) -> Result<u64> {
        Ok(*a)
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime {
            p: BigUint::from(self.p),
        }
    }
}

impl FiniteField for PrimeField {
    fn prime(&self) -> u64 {
        self.p
    }

    fn order(&self) -> u64 {
        self.p
    }

    fn element(&self, index: u64) -> u64 {
        self.from_u64(index)
    }

    fn index_of(&self, a: &u64) -> u64 {
        self.to_u64(*a)
    }
}

/// `F_p` for primes of any size, with big-integer representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigPrimeField {
    p: BigUint,
}

impl BigPrimeField {
    pub fn new(p: BigUint) -> Result<Self> {
        if !is_prime(&p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(BigPrimeField { p })
    }

    pub fn modulus(&self) -> &BigUint {
        &self.p
    }
}

impl Ring for BigPrimeField {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::default()
    }

    fn one(&self) -> BigUint {
        BigUint::from(1u32)
    }

    fn is_zero(&self, a: &BigUint) -> bool {
        a.bits() == 0
    }

    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.p {
            s - &self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            a + &self.p - b
        }
    }

    fn neg(&self, a: &BigUint) -> BigUint {
        if self.is_zero(a) {
            a.clone()
        } else {
            &self.p - a
        }
    }

    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.p
    }

    fn from_bigint(&self, n: &BigInt) -> BigUint {
        let r = n.magnitude() % &self.p;
        if n.sign() == Sign::Minus {
            self.neg(&r)
        } else {
            r
        }
    }

    fn characteristic(&self) -> BigUint {
        self.p.clone()
    }

    fn format_elem(&self, a: &BigUint) -> String {
        a.to_string()
    }
}

impl IntegralDomain for BigPrimeField {
    fn div_exact(&self, a: &BigUint, b: &BigUint) -> Option<BigUint> {
        self.div(a, b)
    }
}

impl Field for BigPrimeField {
    fn inv(&self, a: &BigUint) -> Option<BigUint> {
        if self.is_zero(a) {
            return None;
        }
        Some(a.modpow(&(&self.p - 2u32), &self.p))
    }

    fn frobenius_root(&self, a: &BigUint) -> Result<BigUint> {
        Ok(a.clone())
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime { p: self.p.clone() }
    }
}
