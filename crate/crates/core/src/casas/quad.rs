//! The two-parameter family `X^6 + a X^4 + X^3 + b X^2` and the integer `M`
//! whose prime factors are the characteristics where it has counterexamples.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::closure::roots_in;
use super::search::{make_hit, Partition, SearchMethod, SearchReport};
use super::verdict::{check_ca, CaInstance, CaVerdict};
use crate::arith::{
    is_prime_u64, valuation, BigPrimeField, Field, Prime, PrimeField, Ring, FAST_PATH_LIMIT,
};
use crate::error::{Error, Result};
use crate::multipoly::{MultiPoly, MultiRing};
use crate::report::decimal;
use crate::unipoly::{resultant, resultant_prs, UniPoly};
use crate::{Integers, ZMultiPoly};

pub const QUAD_DEGREE: usize = 6;

/// `M` as a product of prime powers.
pub const M_FACTORS: [(u64, u32); 9] = [
    (13, 3),
    (19, 7),
    (67, 2),
    (20771, 2),
    (21379, 1),
    (23993, 3),
    (7783207, 1),
    (40362599, 1),
    (7390044713023799, 1),
];

pub const M_DECIMAL: &str =
    "2607326988582363825537470723184152230312824382787669211990534450015900107";

/// `X^6 + a X^4 + X^3 + b X^2` with `a`, `b` the variables of `Z[a, b]`.
pub fn quad_family() -> UniPoly<MultiRing<Integers>> {
    let ring = MultiRing::new(Integers::new(), 2);
    let zero = ring.zero();
    let one = ring.one();
    let coeffs = vec![
        zero.clone(),
        zero.clone(),
        ring.var(1),
        one.clone(),
        ring.var(0),
        zero,
        one,
    ];
    UniPoly::new(ring, coeffs)
}

/// `X^6 + a X^4 + X^3 + b X^2` over `field`.
pub fn quad_poly<F: Ring>(field: &F, a: F::Elem, b: F::Elem) -> UniPoly<F> {
    let coeffs = vec![
        field.zero(),
        field.zero(),
        b,
        field.one(),
        a,
        field.zero(),
        field.one(),
    ];
    UniPoly::new(field.clone(), coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadResultant {
    pub i: usize,
    /// Canonical text in `a`, `b`; `"0"` for the zero polynomial.
    pub resultant: String,
    pub terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadResultants {
    pub zero: Vec<usize>,
    pub nonzero: Vec<usize>,
    pub resultants: Vec<QuadResultant>,
    /// Random integer points where every `Res_X(P, P_i)` was re-evaluated
    /// through the univariate PRS.
    pub specialization_checks: usize,
}

/// `Res_X(P, P_i)` in `Z[a, b]` for `i = 1, ..., 5`, at nominal degrees `(6, 6 - i)`.
pub fn quad_resultants() -> Result<Vec<ZMultiPoly>> {
    let family = quad_family();
    (1..QUAD_DEGREE)
        .map(|i| {
            resultant(
                &family,
                &family.hasse_derivative(i),
                Some((QUAD_DEGREE, QUAD_DEGREE - i)),
            )
        })
        .collect()
}

/// Splits `i = 1, ..., 5` by whether `Res_X(P, P_i)` is the zero polynomial,
/// and checks each resultant against `samples` random specializations.
pub fn identically_zero_resultants(samples: usize, seed: u64) -> Result<QuadResultants> {
    let res = quad_resultants()?;
    let z = Integers::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let a = BigInt::from(rng.gen_range(-50i64..=50));
        let b = BigInt::from(rng.gen_range(-50i64..=50));
        let p = quad_poly(&z, a.clone(), b.clone());
        for (k, r) in res.iter().enumerate() {
            let i = k + 1;
            let direct = resultant_prs(
                &p,
                &p.hasse_derivative(i),
                Some((QUAD_DEGREE, QUAD_DEGREE - i)),
            )?;
            if r.eval(&[a.clone(), b.clone()]) != direct {
                return Err(Error::Inconsistent(format!(
                    "Res(P, P_{i}) disagrees at a = {a}, b = {b}"
                )));
            }
        }
    }
    let names = ["a", "b"];
    let resultants = res
        .iter()
        .enumerate()
        .map(|(k, r)| QuadResultant {
            i: k + 1,
            resultant: if r.is_zero() {
                "0".into()
            } else {
                r.display_with(&names).to_string()
            },
            terms: r.len(),
        })
        .collect();
    let (zero, nonzero) = (1..QUAD_DEGREE).partition(|&i| res[i - 1].is_zero());
    Ok(QuadResultants {
        zero,
        nonzero,
        resultants,
        specialization_checks: samples,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadOptions {
    /// Largest `p` swept.
    pub budget: u64,
    pub threads: Option<usize>,
    /// Seed for root splitting; the result does not depend on it.
    pub seed: u64,
    pub timings: bool,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            budget: super::search::DEFAULT_BUDGET,
            threads: None,
            seed: 0,
            timings: true,
        }
    }
}

/// A nonzero resultant reduced mod `p`: `table[j][e]` is the coefficient
/// of `a^e b^j`.
struct Specializer {
    table: Vec<Vec<u64>>,
}

impl Specializer {
    fn new(r: &MultiPoly<PrimeField>) -> Self {
        let (mut db, mut da) = (0, 0);
        for (m, _) in r.terms() {
            da = da.max(m.exps()[0] as usize);
            db = db.max(m.exps()[1] as usize);
        }
        let zero = r.ring().zero();
        let mut table = vec![vec![zero; da + 1]; db + 1];
        for (m, c) in r.terms() {
            table[m.exps()[1] as usize][m.exps()[0] as usize] = *c;
        }
        Specializer { table }
    }

    /// Coefficients in `b`, lowest first, at the given `a`.
    fn at(&self, f: &PrimeField, a: &u64, out: &mut Vec<u64>) {
        out.clear();
        for row in &self.table {
            let mut acc = f.zero();
            for c in row.iter().rev() {
                acc = f.add(&f.mul(&acc, a), c);
            }
            out.push(acc);
        }
        while out.last().is_some_and(|c| f.is_zero(c)) {
            out.pop();
        }
    }
}

/// Monic gcd of two coefficient vectors, lowest first; empty means zero.
fn vec_gcd(f: &PrimeField, mut a: Vec<u64>, mut b: Vec<u64>) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.last().is_some_and(|c| f.is_zero(c)) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = f.inv(b.last().unwrap()).unwrap();
        while a.len() >= b.len() {
            let c = f.mul(a.last().unwrap(), &inv);
            let shift = a.len() - b.len();
            for j in 0..b.len() - 1 {
                a[shift + j] = f.sub(&a[shift + j], &f.mul(&c, &b[j]));
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(lc) = a.last() {
        let inv = f.inv(lc).unwrap();
        for c in a.iter_mut() {
            *c = f.mul(c, &inv);
        }
    }
    a
}

/// All `(a, b)` in `F_p^2` making `X^6 + a X^4 + X^3 + b X^2` a
/// counterexample: for each `a`, the common roots in `b` of the nonzero
/// `Res_X(P, P_i)`, each confirmed by `check_ca`.
pub fn quad_scan(p: Prime, options: &QuadOptions) -> Result<SearchReport> {
    let started = Instant::now();
    let pv = p.get();
    if pv > options.budget {
        return Err(Error::budget("quadrinomial sweep", pv, options.budget));
    }
    let field = PrimeField::from_prime(p)?;
    let specializers: Vec<Specializer> = quad_resultants()?
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| Specializer::new(&r.reduce(field)))
        .collect();

    let block_size = (pv / 256).clamp(1, 1 << 16);
    let blocks = pv.div_ceil(block_size);
    let sweep = |block: u64| -> Result<(Vec<(u64, u64)>, u64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ block);
        let mut found = Vec::new();
        let mut checks = 0;
        let mut buf = Vec::new();
        let lo = block * block_size;
        for a_int in lo..(lo + block_size).min(pv) {
            let a = field.from_u64(a_int);
            let mut g: Vec<u64> = Vec::new();
            for s in &specializers {
                s.at(&field, &a, &mut buf);
                g = vec_gcd(&field, g, buf.clone());
                if g.len() == 1 {
                    break;
                }
            }
            let bs: Vec<u64> = if g.is_empty() {
                (0..pv).collect()
            } else {
                roots_in(&UniPoly::new(field, g), &mut rng)
                    .iter()
                    .map(|v| field.to_u64(*v))
                    .collect()
            };
            for b_int in bs {
                let poly = quad_poly(&field, a, field.from_u64(b_int));
                checks += 1;
                if check_ca(&CaInstance::new(poly)?).is_counterexample {
                    found.push((a_int, b_int));
                }
            }
        }
        Ok((found, checks))
    };
    type BlockResult = (Vec<(u64, u64)>, u64);
    let work = || -> Result<Vec<BlockResult>> { (0..blocks).into_par_iter().map(sweep).collect() };
    let (results, threads) = match options.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::precondition(format!("thread pool: {e}")))?;
            (pool.install(work)?, n)
        }
        None => (work()?, rayon::current_num_threads()),
    };
    let checks: u64 = results.iter().map(|r| r.1).sum();
    let mut points: Vec<(u64, u64)> = results.into_iter().flat_map(|r| r.0).collect();
    points.sort_unstable();
    let hits = points
        .iter()
        .map(|&(a, b)| {
            let poly = quad_poly(&field, field.from_u64(a), field.from_u64(b));
            make_hit(&field, QUAD_DEGREE, a * pv + b, &poly)
        })
        .collect::<Result<Vec<_>>>()?;
    let size = pv * pv;
    Ok(SearchReport {
        method: SearchMethod::QuadrinomialSweep,
        degree: QUAD_DEGREE,
        field: field.descriptor(),
        enumeration_size: size,
        range: [0, size],
        candidates_tested: size,
        complete: true,
        hits,
        partition: Partition {
            block_size: block_size * pv,
            blocks,
            threads,
        },
        consistency_checks: checks,
        wall_time_ms: options
            .timings
            .then(|| started.elapsed().as_secs_f64() * 1e3),
    })
}

/// `check_ca` on `X^6 + a X^4 + X^3 + b X^2` over `F_p`.
pub fn verify_quad_point(p: &BigUint, a: &BigUint, b: &BigUint) -> Result<CaVerdict> {
    let (a, b) = (BigInt::from(a.clone()), BigInt::from(b.clone()));
    match u64::try_from(p) {
        Ok(small) if small < FAST_PATH_LIMIT => {
            let field = PrimeField::new(small)?;
            let poly = quad_poly(&field, field.from_bigint(&a), field.from_bigint(&b));
            Ok(check_ca(&CaInstance::new(poly)?))
        }
        _ => {
            let field = BigPrimeField::new(p.clone())?;
            let poly = quad_poly(&field, field.from_bigint(&a), field.from_bigint(&b));
            Ok(check_ca(&CaInstance::new(poly)?))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MFactor {
    pub prime: u64,
    pub exponent: u32,
    pub is_prime: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MReport {
    pub factors: Vec<MFactor>,
    #[serde(with = "decimal")]
    pub m: BigUint,
    pub digits: usize,
    pub all_prime: bool,
    pub matches_constant: bool,
}

/// Rebuilds `M` from its factorization and checks every factor is prime.
pub fn verify_m() -> MReport {
    let factors: Vec<MFactor> = M_FACTORS
        .iter()
        .map(|&(prime, exponent)| MFactor {
            prime,
            exponent,
            is_prime: is_prime_u64(prime),
        })
        .collect();
    let m = M_FACTORS.iter().fold(BigUint::from(1u32), |acc, &(q, e)| {
        acc * BigUint::from(q).pow(e)
    });
    let text = m.to_string();
    MReport {
        all_prime: factors.iter().all(|f| f.is_prime),
        factors,
        digits: text.len(),
        matches_constant: text == M_DECIMAL,
        m,
    }
}

/// `v_q(M)`.
pub fn m_valuation(q: Prime) -> u64 {
    let m: BigInt = M_DECIMAL.parse().expect("M is a decimal integer");
    match valuation(&m, q) {
        crate::arith::Valuation::Finite(v) => v,
        crate::arith::Valuation::Infinite => unreachable!("M is nonzero"),
    }
}
