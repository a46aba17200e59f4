//! Common zeros over the algebraic closure of `F_p` for the nonzero
//! quadrinomial resultants, decided without enumerating `F_p^2`.
//!
//! `b` is eliminated by pairwise resultants, giving `h(a)`. The radical of
//! `h` is split by distinct-degree factorization, and the gcd in `b` is then
//! run over `F_p[a]/(h_j)`, splitting `h_j` whenever a leading coefficient
//! is a zero divisor. A common zero exists iff some piece keeps a gcd of
//! positive degree (or the zero gcd); one such zero is then realized in the
//! smallest extension field and confirmed with `check_ca`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::quad::{quad_poly, quad_resultants};
use super::verdict::{check_ca, CaInstance, CaVerdict};
use crate::arith::{ExtField, Field, FieldDescriptor, FiniteField, Prime, PrimeField, Ring};
use crate::error::{Error, Result};
use crate::multipoly::{MultiPoly, MultiRing};
use crate::unipoly::{resultant_prs, UniPoly};

type Fp = UniPoly<PrimeField>;

/// Below this order, roots are found by evaluating at every element.
const BRUTE_FORCE_ORDER: u64 = 4096;

/// Every root in `F` of a nonzero polynomial, sorted by canonical index.
pub fn roots_in<F: FiniteField>(g: &UniPoly<F>, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    let field = g.ring();
    let q = field.order();
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = if q <= BRUTE_FORCE_ORDER {
        (0..q)
            .map(|k| field.element(k))
            .filter(|v| field.is_zero(&g.eval(v)))
            .collect()
    } else {
        let x = UniPoly::x(field.clone());
        let linear_part = g.monic().gcd(&(&x.pow_mod(q, &g.monic()) - &x));
        let mut out = Vec::new();
        split_linear(linear_part, rng, &mut out);
        out
    };
    out.sort_by_key(|v| field.index_of(v));
    out
}

/// Roots of a monic product of distinct linear factors; odd order only.
fn split_linear<F: FiniteField>(h: UniPoly<F>, rng: &mut ChaCha8Rng, out: &mut Vec<F::Elem>) {
    let field = h.ring().clone();
    match h.degree() {
        None | Some(0) => {}
        Some(1) => out.push(field.neg(&h.coeff(0))),
        Some(n) => {
            let q = field.order();
            let one = UniPoly::one(field.clone());
            loop {
                let r = field.element(rng.gen_range(0..q));
                let t = &UniPoly::x(field.clone()) - &UniPoly::constant(field.clone(), r);
                let f = h.gcd(&(&t.pow_mod((q - 1) / 2, &h) - &one));
                if f.degree().is_some_and(|k| k >= 1 && k < n) {
                    let (rest, _) = h.div_rem(&f);
                    split_linear(f, rng, out);
                    split_linear(rest.monic(), rng, out);
                    return;
                }
            }
        }
    }
}

/// `(m, D_m)`: `D_m` is the product of the distinct monic irreducible
/// factors of `h` of degree exactly `m`.
pub fn distinct_degree_factors(h: &Fp) -> Vec<(usize, Fp)> {
    let field = *h.ring();
    let p = field.modulus();
    let mut rest = h.monic();
    let x = UniPoly::x(field);
    let mut frob = x.clone();
    let mut out = Vec::new();
    let mut m = 0;
    while rest.degree().unwrap_or(0) >= 1 {
        m += 1;
        if 2 * m > rest.degree().unwrap() {
            // every factor left has degree >= m, so `rest` is irreducible
            out.push((rest.degree().unwrap(), rest));
            break;
        }
        frob = frob.pow_mod(p, h);
        let dm = rest.gcd(&(&frob - &x));
        if dm.degree().unwrap_or(0) >= 1 {
            loop {
                let g = rest.gcd(&dm);
                if g.degree().unwrap_or(0) == 0 {
                    break;
                }
                rest = rest.div_rem(&g).0;
            }
            out.push((m, dm));
        }
    }
    out
}

/// `c^-1 mod h`, or `None` when `gcd(c, h) != 1`.
fn inverse_mod(c: &Fp, h: &Fp) -> Option<Fp> {
    let field = *h.ring();
    let (mut r0, mut r1) = (h.clone(), c.rem(h));
    let (mut s0, mut s1) = (UniPoly::zero(field), UniPoly::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 - &(&q * &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.degree() != Some(0) {
        return None;
    }
    let inv = field.inv(&r0.coeff(0)).unwrap();
    Some(s0.scale(&inv).rem(h))
}

/// A polynomial in `b` over `F_p[a]/(h)`, lowest degree first.
type Residue = Vec<Fp>;

fn reduce_residue(f: &Residue, h: &Fp) -> Residue {
    let mut out: Residue = f.iter().map(|c| c.rem(h)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Monic `gcd(f, g)` over `F_p[a]/(h)` for squarefree `h`, as a list of
/// `(h_j, gcd_j)` with `h = prod h_j`.
fn split_gcd(h: &Fp, f: &Residue, g: &Residue) -> Vec<(Fp, Residue)> {
    let mut a = reduce_residue(f, h);
    let mut b = reduce_residue(g, h);
    loop {
        let Some(lc) = b.last().cloned() else {
            return match a.last().cloned() {
                None => vec![(h.clone(), a)],
                Some(lc) => match inverse_mod(&lc, h) {
                    Some(inv) => vec![(h.clone(), a.iter().map(|c| (c * &inv).rem(h)).collect())],
                    None => split_and_retry(h, &lc, f, g),
                },
            };
        };
        let Some(inv) = inverse_mod(&lc, h) else {
            return split_and_retry(h, &lc, f, g);
        };
        while a.len() >= b.len() {
            let c = (a.last().unwrap() * &inv).rem(h);
            let shift = a.len() - b.len();
            for j in 0..b.len() - 1 {
                a[shift + j] = (&a[shift + j] - &(&c * &b[j])).rem(h);
            }
            a.pop();
            while a.last().is_some_and(|c| c.is_zero()) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

fn split_and_retry(h: &Fp, zero_divisor: &Fp, f: &Residue, g: &Residue) -> Vec<(Fp, Residue)> {
    let h1 = h.gcd(zero_divisor);
    let h2 = h.div_rem(&h1).0.monic();
    let mut out = split_gcd(&h1, f, g);
    out.extend(split_gcd(&h2, f, g));
    out
}

/// A common zero `(a, b)` realized in `F_{p^m}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosurePoint {
    pub extension_degree: usize,
    pub field: FieldDescriptor,
    /// Residue polynomials in the generator `t` of the extension.
    pub a: String,
    pub b: String,
    pub verdict: CaVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadClosureReport {
    pub p: u64,
    /// Degree of the eliminant `h(a)`.
    pub eliminant_degree: usize,
    /// `(m, number of irreducible factors of degree m)` in the radical of `h`.
    pub eliminant_factor_degrees: Vec<(usize, usize)>,
    /// A common zero exists over the algebraic closure.
    pub has_point: bool,
    /// Set when a point exists and its field has order below `2^63`.
    pub point: Option<ClosurePoint>,
}

fn embed<F: FiniteField>(target: &F, base: &PrimeField, c: &Fp) -> UniPoly<F> {
    c.map(target.clone(), |v| {
        target.from_bigint(&BigInt::from(base.to_u64(*v)))
    })
}

/// Decides whether `X^6 + a X^4 + X^3 + b X^2` is a counterexample for some
/// `a`, `b` in the algebraic closure of `F_p`.
pub fn quad_closure(p: Prime, seed: u64) -> Result<QuadClosureReport> {
    let field = PrimeField::from_prime(p)?;
    let ring = MultiRing::new(field, 1);
    let gens: Vec<UniPoly<MultiRing<PrimeField>>> = quad_resultants()?
        .iter()
        .map(|r| r.reduce(field))
        .filter(|r| !r.is_zero())
        .map(|r| to_b_poly(&ring, &r))
        .collect();
    if gens.len() < 2 {
        return Err(Error::precondition(format!(
            "fewer than two nonzero resultants mod {}",
            p.get()
        )));
    }
    let mut h = UniPoly::zero(field);
    for (k, f) in gens.iter().enumerate() {
        for g in &gens[k + 1..] {
            let r = resultant_prs(f, g, None)?;
            h = h.gcd(&r.to_univariate(0).expect("one variable"));
        }
    }
    if h.is_zero() {
        return Err(Error::precondition(
            "the resultants share a factor in b; elimination is degenerate",
        ));
    }
    let residues: Vec<Residue> = gens
        .iter()
        .map(|g| {
            g.coeffs()
                .iter()
                .map(|c| c.to_univariate(0).unwrap())
                .collect()
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = distinct_degree_factors(&h);
    let eliminant_factor_degrees = groups
        .iter()
        .map(|(m, d)| (*m, d.degree().unwrap() / m))
        .collect();
    let mut survivors: Vec<(usize, Fp, Residue)> = Vec::new();
    for (m, dm) in &groups {
        let mut pieces = vec![(dm.clone(), reduce_residue(&residues[0], dm))];
        for r in &residues[1..] {
            pieces = pieces
                .iter()
                .flat_map(|(hj, gj)| split_gcd(hj, gj, r))
                .filter(|(_, g)| g.len() != 1)
                .collect();
        }
        survivors.extend(pieces.into_iter().map(|(hj, gj)| (*m, hj, gj)));
    }
    let has_point = !survivors.is_empty();
    let mut point = None;
    for (m, hj, gj) in &survivors {
        if let Some(pt) = realize(p, *m, hj, gj, &mut rng)? {
            if point
                .as_ref()
                .is_none_or(|q: &ClosurePoint| pt.extension_degree < q.extension_degree)
            {
                point = Some(pt);
            }
        }
    }
    Ok(QuadClosureReport {
        p: p.get(),
        eliminant_degree: h.degree().unwrap(),
        eliminant_factor_degrees,
        has_point,
        point,
    })
}

fn to_b_poly(
    ring: &MultiRing<PrimeField>,
    r: &MultiPoly<PrimeField>,
) -> UniPoly<MultiRing<PrimeField>> {
    let db = r
        .terms()
        .map(|(m, _)| m.exps()[1] as usize)
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![ring.zero(); db + 1];
    for (m, c) in r.terms() {
        coeffs[m.exps()[1] as usize].add_term(crate::multipoly::Monomial::new(&[m.exps()[0]]), c);
    }
    UniPoly::new(ring.clone(), coeffs)
}

fn extension(p: Prime, m: usize) -> Option<ExtField> {
    ExtField::new(p.get(), m, None).ok()
}

/// Smallest `t` such that `g` has a root in the degree-`t` extension of its field.
fn root_degree<F: FiniteField>(g: &UniPoly<F>) -> usize {
    let q = g.ring().order();
    let g = g.monic();
    let x = UniPoly::x(g.ring().clone());
    let mut frob = x.clone();
    for t in 1.. {
        frob = frob.pow_mod(q, &g);
        if g.gcd(&(&frob - &x)).degree().unwrap_or(0) >= 1 {
            return t;
        }
    }
    unreachable!()
}

/// A zero `(alpha, beta)` with `h_j(alpha) = 0` and `g_j(alpha, beta) = 0`,
/// checked by `check_ca`; `None` when its field is too large to build.
fn realize(
    p: Prime,
    m: usize,
    hj: &Fp,
    gj: &Residue,
    rng: &mut ChaCha8Rng,
) -> Result<Option<ClosurePoint>> {
    let base = *hj.ring();
    let Some(k) = extension(p, m) else {
        return Ok(None);
    };
    let specialize = |k: &ExtField, alpha: &Vec<u64>| -> UniPoly<ExtField> {
        let coeffs = gj.iter().map(|c| embed(k, &base, c).eval(alpha)).collect();
        UniPoly::new(k.clone(), coeffs)
    };
    let alpha = roots_in(&embed(&k, &base, hj), rng)
        .into_iter()
        .next()
        .expect("D_m splits over F_{p^m}");
    let g = specialize(&k, &alpha);
    let t = if g.is_zero() { 1 } else { root_degree(&g) };
    let Some(big) = extension(p, m * t) else {
        return Ok(None);
    };
    let alpha = roots_in(&embed(&big, &base, hj), rng)
        .into_iter()
        .next()
        .expect("F_{p^m} embeds");
    let g = specialize(&big, &alpha);
    let beta = if g.is_zero() {
        big.zero()
    } else {
        roots_in(&g, rng)
            .into_iter()
            .next()
            .expect("g has a root at this degree")
    };
    let verdict = check_ca(&CaInstance::new(quad_poly(
        &big,
        alpha.clone(),
        beta.clone(),
    ))?);
    if !verdict.is_counterexample {
        return Err(Error::Inconsistent(format!(
            "common zero of the resultants over {} is not a counterexample",
            big.descriptor()
        )));
    }
    Ok(Some(ClosurePoint {
        extension_degree: m * t,
        field: big.descriptor(),
        a: big.format_elem(&alpha),
        b: big.format_elem(&beta),
        verdict,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn ddf_groups_factors_by_degree() {
        let f = PrimeField::new(7).unwrap();
        // (a - 1)^2 (a - 2) (a^2 + 1) (a^2 + a + 3)
        let lin = &UniPoly::from_i64s(f, &[-1, 1]).pow(2) * &UniPoly::from_i64s(f, &[-2, 1]);
        let quad = &UniPoly::from_i64s(f, &[1, 0, 1]) * &UniPoly::from_i64s(f, &[3, 1, 1]);
        let groups = distinct_degree_factors(&(&lin * &quad));
        assert_eq!(groups.len(), 2);
        assert_eq!(
            groups[0],
            (
                1,
                &UniPoly::from_i64s(f, &[-1, 1]) * &UniPoly::from_i64s(f, &[-2, 1])
            )
        );
        assert_eq!(groups[1], (2, quad));
        let cube = UniPoly::from_i64s(f, &[1, 0, 1]).pow(7);
        assert_eq!(
            distinct_degree_factors(&cube),
            vec![(2, UniPoly::from_i64s(f, &[1, 0, 1]))]
        );
    }

    #[test]
    fn inverse_and_split() {
        let f = PrimeField::new(5).unwrap();
        let h = UniPoly::from_i64s(f, &[1, 0, 1]);
        let c = UniPoly::from_i64s(f, &[1, 1]);
        let inv = inverse_mod(&c, &h).unwrap();
        assert_eq!((&inv * &c).rem(&h), UniPoly::one(f));
        // a^2 + 1 = (a - 2)(a - 3) over F_5
        assert!(inverse_mod(&UniPoly::from_i64s(f, &[-2, 1]), &h).is_none());
    }

    #[test]
    fn rational_and_irrational_points() {
        let r = quad_closure(prime(13), 1).unwrap();
        assert!(r.has_point);
        assert_eq!(r.point.as_ref().unwrap().extension_degree, 1);

        // over F_67 the zeros have a = 0 and b^3 = 23, a non-cube
        let r = quad_closure(prime(67), 1).unwrap();
        assert!(r.has_point);
        let pt = r.point.unwrap();
        assert_eq!(pt.extension_degree, 3);
        assert_eq!(pt.a, "0");
        assert!(pt.verdict.is_counterexample);

        for q in [17u64, 23, 29, 31] {
            let r = quad_closure(prime(q), 1).unwrap();
            assert!(!r.has_point && r.point.is_none(), "p = {q}");
        }
    }

    #[test]
    fn roots_in_extension() {
        let k = ExtField::new(67, 3, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // b^3 - 23 splits completely over F_{67^3}
        let g = UniPoly::new(
            k.clone(),
            vec![k.neg(&k.from_i64(23)), k.zero(), k.zero(), k.one()],
        );
        let rts = roots_in(&g, &mut rng);
        assert_eq!(rts.len(), 3);
        assert!(rts.iter().all(|r| k.is_zero(&g.eval(r))));
    }
}
