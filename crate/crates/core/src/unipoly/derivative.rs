use num_bigint::BigInt;

use super::UniPoly;
use crate::arith::{binomial, Ring};

impl<R: Ring> UniPoly<R> {
    /// The `i`-th Hasse derivative: `X^e` maps to `binom(e, i) X^(e-i)`.
    pub fn hasse_derivative(&self, i: usize) -> Self {
        let ring = &self.ring;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(i)
            .map(|(e, c)| {
                if ring.is_zero(c) {
                    return ring.zero();
                }
                let b = ring.from_bigint(&BigInt::from(binomial(e as u64, i as u64)));
                ring.mul(&b, c)
            })
            .collect();
        Self::new(ring.clone(), coeffs)
    }

    /// The `i`-fold formal derivative: `X^e` maps to `e(e-1)...(e-i+1) X^(e-i)`.
    pub fn classical_derivative(&self, i: usize) -> Self {
        let ring = &self.ring;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(i)
            .map(|(e, c)| {
                (0..i).fold(c.clone(), |acc, j| {
                    ring.mul(&acc, &ring.from_u64((e - j) as u64))
                })
            })
            .collect();
        Self::new(ring.clone(), coeffs)
    }

    /// `P(X + c)` by Horner re-expansion.
    pub fn taylor_shift(&self, c: &R::Elem) -> Self {
        let ring = &self.ring;
        let mut acc: Vec<R::Elem> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            // acc <- acc * (X + c) + a
            acc.push(ring.zero());
            for k in (1..acc.len()).rev() {
                let t = ring.mul(&acc[k], c);
                acc[k] = ring.add(&acc[k - 1], &t);
            }
            acc[0] = ring.add(&ring.mul(&acc[0], c), a);
        }
        Self::new(ring.clone(), acc)
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;
    use proptest::prelude::*;

    use super::*;
    use crate::{PrimeField, Rationals};

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn hasse_examples() {
        let f5 = fp(5);
        let p = UniPoly::from_i64s(f5, &[0, 0, 0, 0, 0, -1, 1]);
        assert_eq!(p.hasse_derivative(0), p);
        assert_eq!(p.hasse_derivative(5), UniPoly::from_i64s(f5, &[4, 1]));
        let f2 = fp(2);
        let q = UniPoly::from_i64s(f2, &[0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert!(q.hasse_derivative(1).is_zero());
        assert!(q.hasse_derivative(13).is_zero());
    }

    #[test]
    fn classical_examples() {
        let q = Rationals::new();
        let x4 = UniPoly::from_i64s(q, &[0, 0, 0, 0, 1]);
        assert_eq!(
            x4.classical_derivative(2),
            UniPoly::from_i64s(q, &[0, 0, 12])
        );
        let f3 = fp(3);
        let p = UniPoly::from_i64s(f3, &[0, 1, 1, 1]);
        assert_eq!(p.classical_derivative(1), UniPoly::from_i64s(f3, &[1, 2]));
        for prime in [2u64, 3, 5, 7] {
            let f = fp(prime);
            let poly = UniPoly::from_i64s(f, &[3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8]);
            assert!(poly.classical_derivative(prime as usize).is_zero());
        }
    }

    #[test]
    fn shift_examples() {
        let q = Rationals::new();
        let x2 = UniPoly::from_i64s(q, &[0, 0, 1]);
        assert_eq!(
            x2.taylor_shift(&q.from_i64(1)),
            UniPoly::from_i64s(q, &[1, 2, 1])
        );
        let f2 = fp(2);
        let p = UniPoly::from_i64s(f2, &[0, 0, 1, 1]);
        assert_eq!(p.taylor_shift(&1), UniPoly::from_i64s(f2, &[0, 1, 0, 1]));
    }

    fn rat_poly(coeffs: &[i64]) -> UniPoly<Rationals> {
        UniPoly::from_i64s(Rationals::new(), coeffs)
    }

    proptest! {
        #[test]
        fn hasse_taylor_identity_rationals(
            coeffs in prop::collection::vec(-20i64..20, 0..13),
            c in -6i64..6,
        ) {
            let q = Rationals::new();
            let p = rat_poly(&coeffs);
            let c = q.from_i64(c);
            let deg = p.degree().unwrap_or(0);
            let mut expansion = UniPoly::zero(q);
            for i in 0..=deg {
                expansion = &expansion + &p.hasse_derivative(i).scale(&q.pow(&c, i as u64));
            }
            prop_assert_eq!(p.taylor_shift(&c), expansion);
        }

        #[test]
        fn hasse_taylor_identity_prime_fields(
            coeffs in prop::collection::vec(0u64..13, 0..13),
            c in 0u64..13,
            pi in 0usize..6,
        ) {
            let prime = [2u64, 3, 5, 7, 11, 13][pi];
            let f = fp(prime);
            let p = UniPoly::new(f, coeffs.iter().map(|&a| f.from_u64(a)).collect());
            let c = f.from_u64(c);
            let deg = p.degree().unwrap_or(0);
            let mut expansion = UniPoly::zero(f);
            for i in 0..=deg {
                expansion = &expansion + &p.hasse_derivative(i).scale(&f.pow(&c, i as u64));
            }
            prop_assert_eq!(p.taylor_shift(&c), expansion);
        }

        #[test]
        fn hasse_composition(coeffs in prop::collection::vec(-9i64..9, 1..13), i in 0usize..7, j in 0usize..7) {
            let p = rat_poly(&coeffs);
            prop_assume!(i + j <= p.degree().unwrap_or(0));
            let lhs = p.hasse_derivative(j).hasse_derivative(i);
            let b = BigRational::from_integer(BigInt::from(binomial((i + j) as u64, i as u64)));
            prop_assert_eq!(lhs, p.hasse_derivative(i + j).scale(&b));
        }

        #[test]
        fn factorial_times_hasse_is_classical(coeffs in prop::collection::vec(-9i64..9, 0..13), i in 0usize..8) {
            let q = Rationals::new();
            let p = rat_poly(&coeffs);
            let fact = (1..=i as i64).fold(q.one(), |acc, k| q.mul(&acc, &q.from_i64(k)));
            prop_assert_eq!(p.hasse_derivative(i).scale(&fact), p.classical_derivative(i));
        }

        #[test]
        fn shift_group_law(coeffs in prop::collection::vec(-9i64..9, 0..10), c in -5i64..5) {
            let q = Rationals::new();
            let p = rat_poly(&coeffs);
            let c = q.from_i64(c);
            prop_assert_eq!(p.taylor_shift(&c).taylor_shift(&q.neg(&c)), p);
        }
    }
}
