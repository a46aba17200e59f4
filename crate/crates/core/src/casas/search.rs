//! Exhaustive enumeration of the normalized slice
//! `X^d + a_1 X^(d-1) + ... + a_(d-1) X`, `(a_1, ..., a_(d-1)) != 0`.
//!
//! Candidate `I` in `[1, q^(d-1))` has base-`q` digits `a_1 ... a_(d-1)`
//! (most significant first), each digit read through
//! [`FiniteField::element`].

use std::path::PathBuf;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checkpoint::Checkpoint;
use super::verdict::{check_ca, CaInstance, CaVerdict};
use crate::arith::{binomial, FieldDescriptor, FiniteField};
use crate::error::{Error, Result};
use crate::unipoly::{resultant_prs, UniPoly};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckpointConfig {
    pub path: PathBuf,
    pub interval: Duration,
    /// Continue from `path` if it exists.
    pub resume: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest number of candidates a single run may enumerate.
    pub budget: u64,
    /// Half-open sub-range of candidate indices; default is the whole slice.
    pub range: Option<(u64, u64)>,
    pub block_size: u64,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    pub checkpoint: Option<CheckpointConfig>,
    /// Every `n`-th candidate is also classified through resultants and
    /// `check_ca`; 0 disables the cross-check.
    pub consistency_stride: u64,
    /// Include wall-clock timing in the report.
    pub timings: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            range: None,
            block_size: 1 << 16,
            threads: None,
            checkpoint: None,
            consistency_stride: 100,
            timings: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    Exhaustive,
    QuadrinomialSweep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    /// Candidate index; for the quadrinomial sweep, `a * p + b`.
    pub index: u64,
    /// `a_1, ..., a_(d-1)`.
    pub coefficients: Vec<String>,
    pub polynomial: String,
    pub verdict: CaVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub block_size: u64,
    pub blocks: u64,
    pub threads: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub method: SearchMethod,
    pub degree: usize,
    pub field: FieldDescriptor,
    /// Size of the full search space.
    pub enumeration_size: u64,
    /// Half-open index range covered by this run.
    pub range: [u64; 2],
    pub candidates_tested: u64,
    pub complete: bool,
    /// Sorted by index.
    pub hits: Vec<SearchHit>,
    pub partition: Partition,
    pub consistency_checks: u64,
    pub wall_time_ms: Option<f64>,
}

impl SearchReport {
    pub fn is_empty(&self) -> bool {
        self.hits.is_empty()
    }

    pub fn hit_polynomials(&self) -> Vec<&str> {
        self.hits.iter().map(|h| h.polynomial.as_str()).collect()
    }
}

/// `q^(d-1)`, or a budget error when it overflows.
fn slice_bound(q: u64, d: usize) -> Result<u64> {
    u32::try_from(d - 1)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .ok_or_else(|| Error::budget("exhaustive search", format!("{q}^{}", d - 1), "u64 range"))
}

/// Candidate polynomial for index `index`, lowest degree first.
pub fn candidate<F: FiniteField>(field: &F, d: usize, index: u64) -> UniPoly<F> {
    let q = field.order();
    let mut coeffs = vec![field.zero(); d + 1];
    coeffs[d] = field.one();
    let mut rest = index;
    // a_(d-1) is the least significant digit and sits at X^1
    for c in coeffs.iter_mut().take(d).skip(1) {
        *c = field.element(rest % q);
        rest /= q;
    }
    UniPoly::new(field.clone(), coeffs)
}

/// Allocation-free classifier for one worker.
struct Filter<F: FiniteField> {
    field: F,
    d: usize,
    /// `binom[e][i]` as a field element.
    binom: Vec<Vec<F::Elem>>,
    digits: Vec<u64>,
    coeffs: Vec<F::Elem>,
    a: Vec<F::Elem>,
    b: Vec<F::Elem>,
}

impl<F: FiniteField> Filter<F> {
    fn new(field: &F, d: usize) -> Self {
        let binom = (0..=d)
            .map(|e| {
                (0..=e)
                    .map(|i| field.from_bigint(&BigInt::from(binomial(e as u64, i as u64))))
                    .collect()
            })
            .collect();
        Filter {
            field: field.clone(),
            d,
            binom,
            digits: vec![0; d + 1],
            coeffs: vec![field.zero(); d + 1],
            a: Vec::with_capacity(d + 1),
            b: Vec::with_capacity(d + 1),
        }
    }

    fn seek(&mut self, index: u64) {
        let q = self.field.order();
        let mut rest = index;
        for e in 1..self.d {
            self.digits[e] = rest % q;
            self.coeffs[e] = self.field.element(self.digits[e]);
            rest /= q;
        }
        self.coeffs[0] = self.field.zero();
        self.coeffs[self.d] = self.field.one();
    }

    fn advance(&mut self) {
        let q = self.field.order();
        for e in 1..self.d {
            self.digits[e] += 1;
            if self.digits[e] < q {
                self.coeffs[e] = self.field.element(self.digits[e]);
                return;
            }
            self.digits[e] = 0;
            self.coeffs[e] = self.field.zero();
        }
    }

    /// True iff every `gcd(P, P_i)` is nontrivial. The coefficient of
    /// `X^i` in `P` is `P_i(0)`, so a zero there means `X` is shared.
    fn all_nontrivial(&mut self) -> bool {
        let f = &self.field;
        for i in (1..self.d).rev() {
            if f.is_zero(&self.coeffs[i]) {
                continue;
            }
            self.b.clear();
            for e in i..=self.d {
                self.b.push(f.mul(&self.binom[e][i], &self.coeffs[e]));
            }
            self.a.clear();
            self.a.extend_from_slice(&self.coeffs);
            if !gcd_is_nontrivial(f, &mut self.a, &mut self.b) {
                return false;
            }
        }
        true
    }
}

fn trim<F: FiniteField>(f: &F, v: &mut Vec<F::Elem>) {
    while v.last().is_some_and(|c| f.is_zero(c)) {
        v.pop();
    }
}

/// `deg gcd(a, b) >= 1`, with `gcd(a, 0) = a`; `a` is nonzero of degree >= 1.
fn gcd_is_nontrivial<F: FiniteField>(f: &F, a: &mut Vec<F::Elem>, b: &mut Vec<F::Elem>) -> bool {
    trim(f, a);
    trim(f, b);
    loop {
        match b.len() {
            0 => return a.len() >= 2,
            1 => return false,
            _ => {}
        }
        let inv = f.inv(b.last().unwrap()).unwrap();
        while a.len() >= b.len() {
            let c = f.mul(a.last().unwrap(), &inv);
            let shift = a.len() - b.len();
            for j in 0..b.len() - 1 {
                a[shift + j] = f.sub(&a[shift + j], &f.mul(&c, &b[j]));
            }
            a.pop();
            trim(f, a);
        }
        std::mem::swap(a, b);
    }
}

/// Full classification of one candidate through `check_ca`, cross-checked
/// against resultants at nominal degrees.
fn cross_check<F: FiniteField>(field: &F, d: usize, index: u64, fast: bool) -> Result<()> {
    let poly = candidate(field, d, index);
    let verdict = check_ca(&CaInstance::new(poly.clone())?);
    if verdict.is_counterexample != fast {
        return Err(Error::Inconsistent(format!(
            "filter and check_ca disagree on candidate {index}"
        )));
    }
    for entry in &verdict.gcd_profile {
        let pi = poly.hasse_derivative(entry.i);
        let res = resultant_prs(&poly, &pi, Some((d, d - entry.i)))?;
        if field.is_zero(&res) != (entry.gcd_degree >= 1) {
            return Err(Error::Inconsistent(format!(
                "resultant and gcd disagree on candidate {index}, i = {}",
                entry.i
            )));
        }
    }
    Ok(())
}

pub(crate) fn make_hit<F: FiniteField>(
    field: &F,
    d: usize,
    index: u64,
    poly: &UniPoly<F>,
) -> Result<SearchHit> {
    let verdict = check_ca(&CaInstance::new(poly.clone())?);
    if !verdict.is_counterexample {
        return Err(Error::Inconsistent(format!(
            "hit {index} fails re-validation"
        )));
    }
    Ok(SearchHit {
        index,
        coefficients: (1..d)
            .map(|j| field.format_elem(&poly.coeff(d - j)))
            .collect(),
        polynomial: poly.to_string(),
        verdict,
    })
}

struct BlockResult {
    block: u64,
    tested: u64,
    hits: Vec<u64>,
    checks: u64,
}

/// Enumerates the normalized slice of degree `d` over `field` and returns
/// every counterexample in it.
pub fn exhaustive_search<F: FiniteField>(
    d: usize,
    field: &F,
    options: &SearchOptions,
) -> Result<SearchReport> {
    let started = Instant::now();
    if d < 2 {
        return Err(Error::domain("exhaustive search needs degree at least 2"));
    }
    let bound = slice_bound(field.order(), d)?;
    let (start, end) = options.range.unwrap_or((1, bound));
    if start < 1 || end > bound || start > end {
        return Err(Error::precondition(format!(
            "range [{start}, {end}) outside [1, {bound})"
        )));
    }
    let len = end - start;
    if len > options.budget {
        return Err(Error::budget("exhaustive search", len, options.budget));
    }
    let block_size = options.block_size.max(1);
    let total_blocks = len.div_ceil(block_size);
    let descriptor = field.descriptor();

    let fresh = Checkpoint::new(
        d,
        descriptor.clone(),
        block_size,
        [start, end],
        total_blocks,
    );
    let state = match &options.checkpoint {
        Some(cfg) if cfg.resume && cfg.path.exists() => {
            let cp = Checkpoint::load(&cfg.path)?;
            cp.ensure_matches(&fresh)?;
            cp
        }
        _ => fresh,
    };
    let pending: Vec<u64> = (0..total_blocks).filter(|&b| !state.is_done(b)).collect();
    let state = Mutex::new((state, Instant::now()));

    let run_block = |filter: &mut Filter<F>, block: u64| -> Result<BlockResult> {
        let lo = start + block * block_size;
        let hi = (lo + block_size).min(end);
        let mut hits = Vec::new();
        let mut checks = 0;
        filter.seek(lo);
        for index in lo..hi {
            let fast = filter.all_nontrivial();
            if fast {
                hits.push(index);
            }
            if options.consistency_stride > 0 && index % options.consistency_stride == 0 {
                cross_check(field, d, index, fast)?;
                checks += 1;
            }
            filter.advance();
        }
        let result = BlockResult {
            block,
            tested: hi - lo,
            hits,
            checks,
        };
        if let Some(cfg) = &options.checkpoint {
            let mut guard = state.lock().unwrap();
            guard.0.mark_done(block, result.tested, &result.hits);
            if guard.1.elapsed() >= cfg.interval {
                guard.0.store(&cfg.path)?;
                guard.1 = Instant::now();
            }
        }
        Ok(result)
    };

    let work = || -> Result<Vec<BlockResult>> {
        pending
            .par_iter()
            .map_init(|| Filter::new(field, d), |filter, &b| run_block(filter, b))
            .collect()
    };
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

    let (final_state, _) = state.into_inner().unwrap();
    let mut hit_indices: Vec<u64>;
    let mut tested: u64;
    let checks: u64 = results.iter().map(|r| r.checks).sum();
    if options.checkpoint.is_some() {
        hit_indices = final_state.hits.clone();
        tested = final_state.candidates_tested;
        if let Some(cfg) = &options.checkpoint {
            final_state.store(&cfg.path)?;
        }
    } else {
        hit_indices = results
            .iter()
            .flat_map(|r| r.hits.iter().copied())
            .collect();
        tested = results.iter().map(|r| r.tested).sum();
    }
    debug_assert!(results.iter().all(|r| r.block < total_blocks));
    hit_indices.sort_unstable();
    hit_indices.dedup();
    tested = tested.min(len);

    // second pass: every streamed hit must survive the full classifier
    let hits = hit_indices
        .par_iter()
        .map(|&index| make_hit(field, d, index, &candidate(field, d, index)))
        .collect::<Result<Vec<_>>>()?;

    Ok(SearchReport {
        method: SearchMethod::Exhaustive,
        degree: d,
        field: descriptor,
        enumeration_size: bound - 1,
        range: [start, end],
        candidates_tested: tested,
        complete: tested == len,
        hits,
        partition: Partition {
            block_size,
            blocks: total_blocks,
            threads,
        },
        consistency_checks: checks,
        wall_time_ms: options
            .timings
            .then(|| started.elapsed().as_secs_f64() * 1e3),
    })
}
