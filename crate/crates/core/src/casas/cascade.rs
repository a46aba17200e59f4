//! The coefficient-elimination argument for `d = n p^k`, and the degrees it
//! settles in characteristic 0.

use serde::{Deserialize, Serialize};

use crate::arith::{binom_mod_p, is_prime_u64, valuation_u64, Prime};
use crate::error::{Error, Result};

/// `binom(n, k) = 0 mod p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingBinomial {
    pub n: u64,
    pub k: u64,
}

/// `a_index = 0` is forced: after the earlier steps, `P_witness` reduces to
/// the constant `a_index`, because every other surviving coefficient of it
/// carries one of the listed binomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcedZero {
    pub index: u64,
    pub witness_derivative: u64,
    pub vanishing: Vec<VanishingBinomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CascadeTrace {
    pub d: u64,
    pub p: u64,
    pub k: u32,
    pub n: u64,
    pub steps: Vec<ForcedZero>,
    /// Coefficient indices `j` (of `a_j X^(d-j)`) left free: the multiples of `p^k`.
    pub residual_support: Vec<u64>,
    pub residual: String,
    pub descended_degree: u64,
    /// Every coefficient is forced to 0, so no counterexample exists over
    /// the algebraic closure of `F_p`.
    pub complete_certificate: bool,
    /// The residual descends to a quadratic.
    pub reduces_to_degree_two: bool,
}

impl CascadeTrace {
    pub fn forced_indices(&self) -> Vec<u64> {
        self.steps.iter().map(|s| s.index).collect()
    }
}

pub fn elimination_cascade(d: u64, p: Prime) -> Result<CascadeTrace> {
    let pv = p.get();
    if d == 0 || !d.is_multiple_of(pv) {
        return Err(Error::domain(format!("{pv} does not divide {d}")));
    }
    let k = valuation_u64(d, p).expect("d is nonzero");
    let pk = pv.pow(k);
    let n = d / pk;
    let mut survivors = vec![0u64];
    let mut steps = Vec::new();
    for i in 1..d {
        if i % pk == 0 {
            survivors.push(i);
            continue;
        }
        // P_(d-i) = sum over j <= i of binom(d-j, i-j) a_j X^(i-j)
        let vanishing: Vec<VanishingBinomial> = survivors
            .iter()
            .map(|&j| VanishingBinomial { n: d - j, k: i - j })
            .collect();
        for b in &vanishing {
            if binom_mod_p(b.n, b.k, p)? != 0 {
                return Err(Error::Inconsistent(format!(
                    "binom({}, {}) is a unit mod {pv}",
                    b.n, b.k
                )));
            }
        }
        steps.push(ForcedZero {
            index: i,
            witness_derivative: d - i,
            vanishing,
        });
    }
    let residual_support: Vec<u64> = (1..d).filter(|j| j % pk == 0).collect();
    let mut residual = format!("X^{d}");
    for &j in &residual_support {
        let e = d - j;
        if e == 1 {
            residual.push_str(&format!(" + a{j}*X"));
        } else {
            residual.push_str(&format!(" + a{j}*X^{e}"));
        }
    }
    Ok(CascadeTrace {
        d,
        p: pv,
        k,
        n,
        steps,
        residual_support,
        residual,
        descended_degree: n,
        complete_certificate: n == 1,
        reduces_to_degree_two: n == 2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverageRule {
    /// `d = p^k`.
    PrimePower,
    /// `d = 2 p^k`.
    TwicePrimePower,
    /// `d = 3 p^k` with `p` odd.
    ThricePrimePowerOddP,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub n: u64,
    pub p: u64,
    pub k: u32,
    pub rule: CoverageRule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CoverageVerdict {
    Covered {
        d: u64,
        decomposition: Decomposition,
    },
    Open {
        d: u64,
    },
}

impl CoverageVerdict {
    pub fn is_covered(&self) -> bool {
        matches!(self, CoverageVerdict::Covered { .. })
    }

    pub fn degree(&self) -> u64 {
        match *self {
            CoverageVerdict::Covered { d, .. } | CoverageVerdict::Open { d } => d,
        }
    }
}

/// Whether the characteristic-0 statement is settled in degree `d` by a
/// decomposition `d = n p^k`, `k >= 1`, with `n` in the base set. The
/// witness minimizes `p`, then `n`. Degree 1 is trivially covered.
pub fn theorem_coverage(d: u64) -> CoverageVerdict {
    if d == 1 {
        let decomposition = Decomposition {
            n: 1,
            p: 2,
            k: 0,
            rule: CoverageRule::PrimePower,
        };
        return CoverageVerdict::Covered { d, decomposition };
    }
    for p in (2..=d).filter(|&p| is_prime_u64(p)) {
        for (n, rule) in [
            (1, CoverageRule::PrimePower),
            (2, CoverageRule::TwicePrimePower),
            (3, CoverageRule::ThricePrimePowerOddP),
        ] {
            if n == 3 && p == 2 || !d.is_multiple_of(n) {
                continue;
            }
            let mut m = d / n;
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            if m == 1 && k >= 1 {
                return CoverageVerdict::Covered {
                    d,
                    decomposition: Decomposition { n, p, k, rule },
                };
            }
        }
    }
    CoverageVerdict::Open { d }
}
