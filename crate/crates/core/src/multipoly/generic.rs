use num_traits::Zero;

use super::{MultiPoly, MultiRing};
use crate::arith::{IntegralDomain, Ring};
use crate::error::{Error, Result};
use crate::unipoly::{resultant, UniPoly};

/// Largest degree accepted for symbolic generic resultants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolicLimits {
    pub max_degree_prime: usize,
    pub max_degree_integer: usize,
}

impl Default for SymbolicLimits {
    fn default() -> Self {
        SymbolicLimits {
            max_degree_prime: 9,
            max_degree_integer: 6,
        }
    }
}

impl SymbolicLimits {
    pub fn unlimited() -> Self {
        SymbolicLimits {
            max_degree_prime: usize::MAX,
            max_degree_integer: usize::MAX,
        }
    }
}

/// `X^d + a_1 X^(d-1) + ... + a_(d-1) X` over `R[a_1, ..., a_(d-1)]`.
pub fn generic_polynomial<R: Ring>(base: R, d: usize) -> UniPoly<MultiRing<R>> {
    assert!(d >= 1, "degree must be positive");
    let ring = MultiRing::new(base, d - 1);
    let mut coeffs = vec![ring.zero(); d + 1];
    coeffs[d] = ring.one();
    for j in 1..d {
        coeffs[d - j] = ring.var(j - 1);
    }
    UniPoly::new(ring, coeffs)
}

/// `Res_X(P, P_i)` of the generic polynomial at nominal degrees `(d, d - i)`.
pub fn generic_resultant<R: IntegralDomain>(
    base: R,
    d: usize,
    i: usize,
    limits: &SymbolicLimits,
) -> Result<MultiPoly<R>> {
    if d < 2 || i == 0 || i >= d {
        return Err(Error::domain(format!(
            "need 1 <= i <= d - 1, got d = {d}, i = {i}"
        )));
    }
    let ceiling = if base.characteristic().is_zero() {
        limits.max_degree_integer
    } else {
        limits.max_degree_prime
    };
    if d > ceiling {
        return Err(Error::budget(
            format!(
                "symbolic generic resultant over characteristic {}",
                base.characteristic()
            ),
            format!("degree {d}"),
            format!("degree {ceiling}"),
        ));
    }
    let p = generic_polynomial(base, d);
    let pi = p.hasse_derivative(i);
    resultant(&p, &pi, Some((d, d - i)))
}
