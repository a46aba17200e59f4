//! Extension fields `F_{p^m} = F_p[t]/(f)` and irreducible-modulus search.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};

use super::descriptor::FieldDescriptor;
use super::number_theory::Prime;
use super::prime_field::PrimeField;
use super::ring::{Field, FiniteField, IntegralDomain, Ring};
use crate::error::{Error, Result};
use crate::unipoly::UniPoly;

#[derive(Debug, PartialEq, Eq)]
struct ExtInner {
    base: PrimeField,
    m: usize,
    /// Monic modulus over the base, lowest degree first, length `m + 1`.
    modulus: Vec<u64>,
    order: u64,
}

/// `F_{p^m}`. Elements are residue polynomials of degree `< m`, stored as
/// exactly `m` base-field coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    inner: Arc<ExtInner>,
}

impl ExtField {
    /// Builds `F_{p^m}` over the given monic irreducible `modulus` (canonical
    /// residues, lowest degree first), or over [`find_irreducible`]'s choice.
    pub fn new(p: u64, m: usize, modulus: Option<&[u64]>) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("extension degree must be at least 1"));
        }
        let base = PrimeField::new(p)?;
        let order = u32::try_from(m)
            .ok()
            .and_then(|m| p.checked_pow(m))
            .filter(|q| *q < 1 << 63)
            .ok_or_else(|| Error::domain(format!("field order {p}^{m} does not fit 63 bits")))?;
        let poly = match modulus {
            Some(coeffs) => {
                let poly = UniPoly::new(base, coeffs.iter().map(|&c| base.from_u64(c)).collect());
                if poly.degree() != Some(m) {
                    return Err(Error::domain(format!("modulus must have degree {m}")));
                }
                if !poly.is_monic() {
                    return Err(Error::domain("modulus must be monic"));
                }
                if !is_irreducible(&poly) {
                    return Err(Error::domain(format!(
                        "modulus {poly} is reducible over F_{p}"
                    )));
                }
                poly
            }
            None => find_irreducible(Prime::new(p)?, m),
        };
        let modulus = poly.coeffs().to_vec();
        Ok(ExtField {
            inner: Arc::new(ExtInner {
                base,
                m,
                modulus,
                order,
            }),
        })
    }

    pub fn base(&self) -> &PrimeField {
        &self.inner.base
    }

    pub fn degree(&self) -> usize {
        self.inner.m
    }

    /// The modulus as canonical residues, lowest degree first.
    pub fn modulus(&self) -> Vec<u64> {
        self.inner
            .modulus
            .iter()
            .map(|c| self.inner.base.to_u64(*c))
            .collect()
    }

    /// The class of `t`.
    pub fn generator(&self) -> Vec<u64> {
        let mut g = self.zero();
        if self.inner.m == 1 {
            g[0] = self.inner.base.neg(&self.inner.modulus[0]);
        } else {
            g[1] = self.inner.base.one();
        }
        g
    }

    /// Element from canonical residues of the residue polynomial.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Vec<u64> {
        let base = &self.inner.base;
        let raw = UniPoly::new(*base, coeffs.iter().map(|&c| base.from_u64(c)).collect());
        self.reduce(raw.coeffs().to_vec())
    }

    fn reduce(&self, mut c: Vec<u64>) -> Vec<u64> {
        let ExtInner {
            base, m, modulus, ..
        } = &*self.inner;
        let m = *m;
        for k in (m..c.len()).rev() {
            let lead = c[k];
            if lead != 0 {
                for j in 0..m {
                    let t = base.mul(&lead, &modulus[j]);
                    c[k - m + j] = base.sub(&c[k - m + j], &t);
                }
            }
        }
        c.resize(m, 0);
        c
    }
}

impl Ring for ExtField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.inner.m]
    }

    fn one(&self) -> Vec<u64> {
        let mut e = self.zero();
        e[0] = self.inner.base.one();
        e
    }

    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|c| *c == 0)
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let base = &self.inner.base;
        a.iter().zip(b).map(|(x, y)| base.add(x, y)).collect()
    }

    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let base = &self.inner.base;
        a.iter().zip(b).map(|(x, y)| base.sub(x, y)).collect()
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        let base = &self.inner.base;
        a.iter().map(|x| base.neg(x)).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let base = &self.inner.base;
        let m = self.inner.m;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = base.add(&prod[i + j], &base.mul(x, y));
            }
        }
        self.reduce(prod)
    }

    fn from_bigint(&self, n: &BigInt) -> Vec<u64> {
        let mut e = self.zero();
        e[0] = self.inner.base.from_bigint(n);
        e
    }

    fn characteristic(&self) -> BigUint {
        BigUint::from(self.inner.base.modulus())
    }

    fn format_elem(&self, a: &Vec<u64>) -> String {
        let base = &self.inner.base;
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != 0)
            .map(|(e, c)| {
                let c = base.to_u64(*c);
                match (e, c) {
                    (0, _) => c.to_string(),
                    (1, 1) => "t".into(),
                    (1, _) => format!("{c}*t"),
                    (_, 1) => format!("t^{e}"),
                    _ => format!("{c}*t^{e}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl IntegralDomain for ExtField {
    fn div_exact(&self, a: &Vec<u64>, b: &Vec<u64>) -> Option<Vec<u64>> {
        self.div(a, b)
    }
}

impl Field for ExtField {
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.inner.order - 2))
    }

    /// `a^(p^(m-1))`, the inverse of the Frobenius map.
    fn frobenius_root(&self, a: &Vec<u64>) -> Result<Vec<u64>> {
        let p = self.inner.base.modulus();
        let mut r = a.clone();
        for _ in 1..self.inner.m {
            r = self.pow(&r, p);
        }
        Ok(r)
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Extension {
            p: self.inner.base.modulus(),
            m: self.inner.m as u32,
            modulus: self.modulus(),
        }
    }
}

impl FiniteField for ExtField {
    fn prime(&self) -> u64 {
        self.inner.base.modulus()
    }

    fn order(&self) -> u64 {
        self.inner.order
    }

    /// Base-`p` digits of `index`, least significant digit as constant term.
    fn element(&self, mut index: u64) -> Vec<u64> {
        let base = &self.inner.base;
        let p = base.modulus();
        (0..self.inner.m)
            .map(|_| {
                let digit = index % p;
                index /= p;
                base.from_u64(digit)
            })
            .collect()
    }

    fn index_of(&self, a: &Vec<u64>) -> u64 {
        let base = &self.inner.base;
        let p = base.modulus();
        a.iter().rev().fold(0, |acc, c| acc * p + base.to_u64(*c))
    }
}

/// Ben-Or test: `f` of degree `m` is irreducible iff
/// `gcd(X^(p^i) - X, f) = 1` for `1 <= i <= m/2`.
pub fn is_irreducible(f: &UniPoly<PrimeField>) -> bool {
    let Some(m) = f.degree() else { return false };
    if m == 0 {
        return false;
    }
    let field = *f.ring();
    let p = field.modulus();
    let x = UniPoly::x(field);
    let mut power = x.clone();
    for _ in 0..m / 2 {
        power = power.pow_mod(p, f);
        if f.gcd(&(&power - &x)).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Lowest monic irreducible polynomial of degree `m` over `F_p`.
///
/// Candidates `X^m + c_{m-1} X^{m-1} + ... + c_0` are enumerated by the
/// integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` in increasing order.
pub fn find_irreducible(p: Prime, m: usize) -> UniPoly<PrimeField> {
    let field = PrimeField::from_prime(p).expect("word-size prime");
    let p = p.get();
    let mut index: u128 = 0;
    loop {
        let mut rest = index;
        let mut coeffs: Vec<u64> = (0..m)
            .map(|_| {
                let digit = (rest % p as u128) as u64;
                rest /= p as u128;
                field.from_u64(digit)
            })
            .collect();
        coeffs.push(field.one());
        let candidate = UniPoly::new(field, coeffs);
        if is_irreducible(&candidate) {
            return candidate;
        }
        index += 1;
    }
}
