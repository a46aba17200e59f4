use std::cmp::Ordering;

use super::{Monomial, MultiPoly};
use crate::arith::Ring;
use crate::error::{Error, Result};

/// Weighted degree reverse lexicographic order on `a_1, ..., a_n` with
/// weights `1, ..., n`. Equal weighted degrees are separated at the first
/// differing variable, where the smaller exponent wins; this is the order
/// under which `a_{d-i}^d` leads the generic resultant in characteristic
/// `p` when `d` is a power of `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedOrder {
    nvars: usize,
}

impl WeightedOrder {
    pub fn new(nvars: usize) -> Self {
        WeightedOrder { nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn weights(&self) -> Vec<u32> {
        (1..=self.nvars as u32).collect()
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.cmp(v))
    }

    pub(crate) fn check(&self, m: &Monomial) -> Result<()> {
        if m.nvars() != self.nvars {
            return Err(Error::domain(format!(
                "monomial in {} variables compared under an order on {}",
                m.nvars(),
                self.nvars
            )));
        }
        Ok(())
    }
}

/// Weighted-degree profile of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Vacuous,
    Degree(u32),
    Mixed,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }
}

pub fn is_weighted_homogeneous<R: Ring>(f: &MultiPoly<R>) -> Homogeneity {
    let mut degrees = f.terms().map(|(m, _)| m.weighted_degree());
    match degrees.next() {
        None => Homogeneity::Vacuous,
        Some(d) if degrees.all(|e| e == d) => Homogeneity::Degree(d),
        Some(_) => Homogeneity::Mixed,
    }
}

pub fn leading_monomial<R: Ring>(f: &MultiPoly<R>, order: &WeightedOrder) -> Result<Monomial> {
    if f.nvars() != order.nvars() {
        return Err(Error::domain(
            "polynomial and order disagree on variable count",
        ));
    }
    f.leading_term()
        .map(|(m, _)| m.clone())
        .ok_or_else(|| Error::domain("the zero polynomial has no leading monomial"))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::Integers;

    // All exponent vectors in `n` variables with weighted degree <= `max`.
    fn monomials(n: usize, max: u32) -> Vec<Monomial> {
        let mut out = vec![vec![]];
        for j in 0..n {
            let w = j as u32 + 1;
            out = out
                .into_iter()
                .flat_map(|e: Vec<u16>| {
                    let used: u32 = e
                        .iter()
                        .enumerate()
                        .map(|(k, &x)| (k as u32 + 1) * x as u32)
                        .sum();
                    (0..=(max - used) / w).map(move |x| {
                        let mut f = e.clone();
                        f.push(x as u16);
                        f
                    })
                })
                .collect();
        }
        out.iter().map(|e| Monomial::new(e)).collect()
    }

    #[test]
    fn order_axioms_exhaustive() {
        for n in 1..=4 {
            let order = WeightedOrder::new(n);
            let ms = monomials(n, 8);
            let one = Monomial::one(n);
            for u in &ms {
                assert!(order.compare(&one, u).unwrap() != Ordering::Greater);
                for v in &ms {
                    let uv = order.compare(u, v).unwrap();
                    assert_eq!(uv, order.compare(v, u).unwrap().reverse());
                    assert_eq!(uv == Ordering::Equal, u == v);
                    for w in ms.iter().filter(|w| w.weighted_degree() <= 4) {
                        assert_eq!(order.compare(&u.mul(w), &v.mul(w)).unwrap(), uv);
                    }
                }
            }
            // transitivity via a consistent sort
            let mut sorted = ms.clone();
            sorted.sort();
            for pair in sorted.windows(2) {
                assert_eq!(order.compare(&pair[0], &pair[1]).unwrap(), Ordering::Less);
            }
        }
    }

    #[test]
    fn mismatched_variable_counts() {
        let order = WeightedOrder::new(2);
        assert!(order.compare(&Monomial::one(2), &Monomial::one(3)).is_err());
    }

    #[test]
    fn homogeneity() {
        let z = Integers::new();
        let f = MultiPoly::term(z, Monomial::new(&[2, 0]), BigInt::from(-1));
        assert_eq!(is_weighted_homogeneous(&f), Homogeneity::Degree(2));
        let g = MultiPoly::var(z, 2, 0).add(&MultiPoly::var(z, 2, 1));
        assert_eq!(is_weighted_homogeneous(&g), Homogeneity::Mixed);
        assert_eq!(
            is_weighted_homogeneous(&MultiPoly::zero(z, 2)),
            Homogeneity::Vacuous
        );
        assert!(leading_monomial(&MultiPoly::zero(z, 2), &WeightedOrder::new(2)).is_err());
        assert_eq!(
            leading_monomial(&f, &WeightedOrder::new(2)).unwrap(),
            Monomial::new(&[2, 0])
        );
    }
}
