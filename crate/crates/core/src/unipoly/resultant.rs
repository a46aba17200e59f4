//! Resultants by two independent routes: the Sylvester determinant and
//! the subresultant polynomial remainder sequence.
//!
//! Sign convention: `Res(P, Q)` is the determinant of the Sylvester matrix
//! whose first `n` rows hold the shifted coefficients of `P` (nominal degree
//! `m`) and whose last `m` rows hold those of `Q` (nominal degree `n`).
//! For monic `P` this equals the product of `Q` over the roots of `P`.

use super::UniPoly;
use crate::arith::IntegralDomain;
use crate::determinant::determinant;
use crate::error::{Error, Result};

fn nominal<R: IntegralDomain>(
    p: &UniPoly<R>,
    q: &UniPoly<R>,
    degrees: Option<(usize, usize)>,
) -> Result<(usize, usize)> {
    let true_p = p.degree().unwrap_or(0);
    let true_q = q.degree().unwrap_or(0);
    let (m, n) = degrees.unwrap_or((true_p, true_q));
    if m < true_p || n < true_q {
        return Err(Error::precondition(format!(
            "nominal degrees ({m}, {n}) below true degrees ({true_p}, {true_q})"
        )));
    }
    Ok((m, n))
}

/// The `(m + n) x (m + n)` Sylvester matrix at nominal degrees `(m, n)`.
pub fn sylvester_matrix<R: IntegralDomain>(
    p: &UniPoly<R>,
    q: &UniPoly<R>,
    m: usize,
    n: usize,
) -> Vec<Vec<R::Elem>> {
    let ring = p.ring();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, deg, count) in [(p, m, n), (q, n, m)] {
        for shift in 0..count {
            let mut row = vec![ring.zero(); size];
            for k in 0..=deg {
                row[shift + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res(P, Q)` as the Sylvester determinant, at the true degrees or at the
/// supplied nominal degrees (which must not be smaller).
pub fn resultant<R: IntegralDomain>(
    p: &UniPoly<R>,
    q: &UniPoly<R>,
    nominal_degrees: Option<(usize, usize)>,
) -> Result<R::Elem> {
    let (m, n) = nominal(p, q, nominal_degrees)?;
    Ok(determinant(p.ring(), &sylvester_matrix(p, q, m, n)))
}

/// `Res(P, Q)` by the subresultant PRS, under the same sign convention and
/// nominal-degree semantics as [`resultant`].
pub fn resultant_prs<R: IntegralDomain>(
    p: &UniPoly<R>,
    q: &UniPoly<R>,
    nominal_degrees: Option<(usize, usize)>,
) -> Result<R::Elem> {
    let (m, n) = nominal(p, q, nominal_degrees)?;
    let ring = p.ring();
    if m == 0 && n == 0 {
        return Ok(ring.one());
    }
    // A zero polynomial contributes an all-zero block of rows unless that
    // block is empty, leaving a scalar matrix of the other constant.
    if p.is_zero() {
        return Ok(if n > 0 {
            ring.zero()
        } else {
            ring.pow(&q.coeff(0), m as u64)
        });
    }
    if q.is_zero() {
        return Ok(if m > 0 {
            ring.zero()
        } else {
            ring.pow(&p.coeff(0), n as u64)
        });
    }
    let tp = p.degree().unwrap();
    let tq = q.degree().unwrap();
    if m > tp && n > tq {
        return Ok(ring.zero());
    }
    let core = subresultant(p, q);
    let lc_p = p.leading_coeff().unwrap();
    let lc_q = q.leading_coeff().unwrap();
    // Res_{m,n} = lc(P)^(n - tq) Res_{m,tq} when only Q is padded, and
    // Res_{m,n} = (-1)^(n (m - tp)) lc(Q)^(m - tp) Res_{tp,n} when only P is.
    let adjusted = if n > tq {
        ring.mul(&ring.pow(lc_p, (n - tq) as u64), &core)
    } else if m > tp {
        let r = ring.mul(&ring.pow(lc_q, (m - tp) as u64), &core);
        if (n * (m - tp)) % 2 == 1 {
            ring.neg(&r)
        } else {
            r
        }
    } else {
        core
    };
    Ok(adjusted)
}

// Collins/Brown subresultant algorithm at the true degrees of nonzero inputs.
fn subresultant<R: IntegralDomain>(p: &UniPoly<R>, q: &UniPoly<R>) -> R::Elem {
    let ring = p.ring();
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut negate = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        negate = (da * db) % 2 == 1;
    }
    if b.degree() == Some(0) {
        let r = ring.pow(b.leading_coeff().unwrap(), a.degree().unwrap() as u64);
        return if negate { ring.neg(&r) } else { r };
    }
    let mut g = ring.one();
    let mut h = ring.one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = (da - db) as u64;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return ring.zero();
        }
        let divisor = ring.mul(&g, &ring.pow(&h, delta));
        a = b;
        b = r
            .div_exact_scalar(&divisor)
            .expect("subresultant division is exact");
        g = a.leading_coeff().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            ring.div_exact(&ring.pow(&g, delta), &ring.pow(&h, delta - 1))
                .expect("subresultant division is exact")
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u64;
            let lc_b = b.leading_coeff().unwrap();
            let r = if da == 0 {
                ring.one()
            } else {
                ring.div_exact(&ring.pow(lc_b, da), &ring.pow(&h, da - 1))
                    .expect("subresultant division is exact")
            };
            return if negate { ring.neg(&r) } else { r };
        }
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use proptest::prelude::*;

    use super::*;
    use crate::arith::Ring;
    use crate::{Integers, PrimeField};

    fn z(coeffs: &[i64]) -> UniPoly<Integers> {
        UniPoly::from_i64s(Integers::new(), coeffs)
    }

    #[test]
    fn common_factor_gives_zero() {
        let p = z(&[1, -3, 0, 2]);
        assert_eq!(resultant(&p, &p, None).unwrap(), BigInt::from(0));
        assert_eq!(resultant_prs(&p, &p, None).unwrap(), BigInt::from(0));
    }

    #[test]
    fn empty_matrix_is_one() {
        let one = z(&[1]);
        assert_eq!(
            resultant(&one, &one, Some((0, 0))).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            resultant_prs(&one, &one, Some((0, 0))).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn nominal_degree_validation() {
        let p = z(&[0, 0, 1]);
        assert!(resultant(&p, &z(&[1, 1]), Some((1, 1))).is_err());
    }

    #[test]
    fn vanishing_leading_coefficient_at_nominal_degree() {
        // P = X^2 + X over F_2, Q = 2X + 1 = 1 at nominal degree 1.
        let f2 = PrimeField::new(2).unwrap();
        let p = UniPoly::from_i64s(f2, &[0, 1, 1]);
        let q = UniPoly::from_i64s(f2, &[1, 2]);
        assert_eq!(resultant(&p, &q, Some((2, 1))).unwrap(), 1);
        assert_eq!(resultant_prs(&p, &q, Some((2, 1))).unwrap(), 1);
        // Q identically zero shares every factor.
        let zero = UniPoly::zero(f2);
        assert_eq!(resultant(&p, &zero, Some((2, 1))).unwrap(), 0);
        assert_eq!(resultant_prs(&p, &zero, Some((2, 1))).unwrap(), 0);
    }

    fn random_poly(f: PrimeField, coeffs: &[u64], monic: bool) -> UniPoly<PrimeField> {
        let mut c: Vec<u64> = coeffs.iter().map(|&x| f.from_u64(x)).collect();
        if monic {
            c.push(f.one());
        }
        UniPoly::new(f, c)
    }

    proptest! {
        #[test]
        fn sylvester_and_prs_agree_over_integers(
            a in prop::collection::vec(-5i64..6, 1..7),
            b in prop::collection::vec(-5i64..6, 1..7),
            pad_a in 0usize..2,
            pad_b in 0usize..2,
        ) {
            let (p, q) = (z(&a), z(&b));
            let nominal = Some((p.degree().unwrap_or(0) + pad_a, q.degree().unwrap_or(0) + pad_b));
            prop_assert_eq!(resultant(&p, &q, nominal).unwrap(), resultant_prs(&p, &q, nominal).unwrap());
        }

        #[test]
        fn sylvester_and_prs_agree_over_fp(
            a in prop::collection::vec(0u64..7, 1..8),
            b in prop::collection::vec(0u64..7, 1..8),
        ) {
            let f = PrimeField::new(7).unwrap();
            let (p, q) = (random_poly(f, &a, false), random_poly(f, &b, false));
            prop_assert_eq!(resultant(&p, &q, None).unwrap(), resultant_prs(&p, &q, None).unwrap());
        }

        #[test]
        fn multiplicativity(
            a in prop::collection::vec(0u64..11, 0..5),
            b in prop::collection::vec(0u64..11, 0..5),
            c in prop::collection::vec(0u64..11, 0..5),
        ) {
            let f = PrimeField::new(11).unwrap();
            let p = random_poly(f, &a, true);
            let q = random_poly(f, &b, true);
            let r = random_poly(f, &c, true);
            let lhs = resultant(&p, &(&q * &r), None).unwrap();
            let rhs = f.mul(&resultant(&p, &q, None).unwrap(), &resultant(&p, &r, None).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
