//! Exact determinants over commutative rings.

use std::collections::HashMap;

use crate::arith::{IntegralDomain, Ring};

/// Determinant by fraction-free (Bareiss) elimination, falling back to
/// memoized cofactor expansion if an exact division ever fails.
pub fn determinant<R: IntegralDomain>(ring: &R, matrix: &[Vec<R::Elem>]) -> R::Elem {
    match bareiss(ring, matrix.to_vec()) {
        Some(det) => det,
        None => cofactor_determinant(ring, matrix),
    }
}

/// Bareiss elimination. Returns `None` when an intermediate quotient is
/// not exact, which cannot happen over an integral domain.
pub fn bareiss<R: IntegralDomain>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> Option<R::Elem> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return Some(ring.one());
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        let pivot = (k..n)
            .filter(|&r| !ring.is_zero(&m[r][k]))
            .min_by_key(|&r| ring.size_hint(&m[r][k]));
        let Some(pivot) = pivot else {
            return Some(ring.zero());
        };
        if pivot != k {
            m.swap(pivot, k);
            negate = !negate;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..n {
                let a = ring.mul(&row[j], &pivot_row[k]);
                let t = if ring.is_zero(&factor) {
                    a
                } else {
                    ring.sub(&a, &ring.mul(&factor, &pivot_row[j]))
                };
                row[j] = ring.div_exact(&t, &prev)?;
            }
            row[k] = ring.zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Some(if negate { ring.neg(&det) } else { det })
}

/// Laplace expansion along rows, memoized on the set of used columns.
/// Division-free, so it works over any commutative ring; cost grows like
/// `2^n`, so keep `n` small (at most 24).
pub fn cofactor_determinant<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    assert!(n <= 24, "cofactor expansion limited to 24x24");
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    // minors[mask] = signed sum over placements of rows 0..|mask| into columns `mask`
    let mut layer: HashMap<u32, R::Elem> = HashMap::from([(0u32, ring.one())]);
    for row in m {
        let mut next: HashMap<u32, R::Elem> = HashMap::new();
        for (mask, value) in &layer {
            for (col, entry) in row.iter().enumerate() {
                if mask & (1 << col) != 0 || ring.is_zero(entry) {
                    continue;
                }
                let inversions = (mask >> (col + 1)).count_ones();
                let mut term = ring.mul(value, entry);
                if inversions % 2 == 1 {
                    term = ring.neg(&term);
                }
                let slot = next.entry(mask | (1 << col)).or_insert_with(|| ring.zero());
                *slot = ring.add(slot, &term);
            }
        }
        layer = next;
    }
    let full = (1u32 << n) - 1;
    layer.remove(&full).unwrap_or_else(|| ring.zero())
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use proptest::prelude::*;

    use super::*;
    use crate::{Integers, PrimeField};

    fn z_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    // Leibniz formula over all permutations.
    fn leibniz(m: &[Vec<BigInt>]) -> BigInt {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.len();
        perms(n)
            .into_iter()
            .map(|p| {
                let inv = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let prod: BigInt = (0..n).map(|i| m[i][p[i]].clone()).product();
                if inv % 2 == 1 {
                    -prod
                } else {
                    prod
                }
            })
            .sum()
    }

    #[test]
    fn small_cases() {
        let z = Integers::new();
        assert_eq!(determinant(&z, &[]), BigInt::from(1));
        assert_eq!(
            determinant(&z, &z_matrix(&[&[1, 0], &[0, 1]])),
            BigInt::from(1)
        );
        assert_eq!(
            determinant(&z, &z_matrix(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            determinant(&z, &z_matrix(&[&[2, 4], &[1, 2]])),
            BigInt::from(0)
        );
        assert_eq!(
            cofactor_determinant(&z, &z_matrix(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
    }

    proptest! {
        #[test]
        fn bareiss_and_cofactor_match_leibniz(
            n in 1usize..6,
            entries in prop::collection::vec(-4i64..5, 36),
        ) {
            let z = Integers::new();
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(entries[i * 6 + j])).collect())
                .collect();
            let expected = leibniz(&m);
            prop_assert_eq!(determinant(&z, &m), expected.clone());
            prop_assert_eq!(cofactor_determinant(&z, &m), expected);
        }

        #[test]
        fn bareiss_over_prime_field(n in 1usize..7, entries in prop::collection::vec(0u64..5, 49)) {
            let f = PrimeField::new(5).unwrap();
            let m: Vec<Vec<u64>> = (0..n).map(|i| entries[i * 7..i * 7 + n].to_vec()).collect();
            prop_assert_eq!(determinant(&f, &m), cofactor_determinant(&f, &m));
        }
    }
}
