//! Primes, `p`-adic valuations, Kummer carries and binomials modulo `p`.

use std::fmt;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Miller-Rabin rounds used above `2^64` unless overridden.
pub const DEFAULT_MR_ROUNDS: u32 = 64;
const DEFAULT_MR_SEED: u64 = 0x5eed_ca5a_a1fe_0001;

/// A prime that fits in a machine word. Construction checks primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A `p`-adic valuation: a natural number or infinity (the valuation of 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(e) => e.fmt(f),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Largest `e` with `p^e | n`; infinite for `n = 0`.
pub fn valuation(n: &BigInt, p: Prime) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p.get());
    let mut n = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(e);
        }
        n = q;
        e += 1;
    }
}

/// Valuation of a machine integer; `None` stands for infinity.
pub fn valuation_u64(mut n: u64, p: Prime) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let p = p.get();
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    Some(e)
}

/// Number of carries when adding `i` and `d - i` in base `p`.
pub fn kummer_carries(d: u64, i: u64, p: Prime) -> Result<u64> {
    if i > d {
        return Err(Error::domain(format!("index {i} exceeds {d}")));
    }
    let p = p.get();
    let (mut x, mut y) = (i, d - i);
    let mut carry = 0;
    let mut carries = 0;
    while x > 0 || y > 0 || carry > 0 {
        let s = x % p + y % p + carry;
        carry = u64::from(s >= p);
        carries += carry;
        x /= p;
        y /= p;
    }
    Ok(carries)
}

/// `binom(d, i) mod p` by Lucas' theorem; returns the canonical residue.
pub fn binom_mod_p(d: u64, i: u64, p: Prime) -> Result<u64> {
    if i > d {
        return Err(Error::domain(format!("index {i} exceeds {d}")));
    }
    let p = p.get();
    let (mut n, mut k) = (d, i);
    let mut acc: u64 = 1;
    while k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return Ok(0);
        }
        acc = mul_mod(acc, small_binom_mod(nd, kd, p), p);
        n /= p;
        k /= p;
    }
    Ok(acc)
}

// binom(n, k) mod p for 0 <= k <= n < p.
fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for j in 0..k {
        num = mul_mod(num, (n - j) % p, p);
        den = mul_mod(den, (j + 1) % p, p);
    }
    mul_mod(num, pow_mod(den, p - 2, p), p)
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}

const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality for machine words.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality with the default round count above `2^64`.
pub fn is_prime(n: &BigUint) -> bool {
    is_prime_with(n, DEFAULT_MR_ROUNDS, DEFAULT_MR_SEED)
}

/// Deterministic below `2^64`; above, `rounds` Miller-Rabin rounds with
/// bases drawn from a ChaCha stream seeded by `seed`.
pub fn is_prime_with(n: &BigUint, rounds: u32, seed: u64) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &MR_WITNESSES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let two = BigUint::from(2u32);
    'round: for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &n_minus_1);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'round;
            }
        }
        return false;
    }
    true
}
