use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::UniPoly;
use crate::arith::Field;
use crate::error::{Error, Result};

/// The `Q` with `Q^(p^k) = P`, for `P` supported on multiples of `p^k` over a
/// perfect field of characteristic `p`.
pub fn descend<F: Field>(poly: &UniPoly<F>, p: u64, k: u32) -> Result<UniPoly<F>> {
    let field = poly.ring();
    if field.characteristic() != BigUint::from(p) {
        return Err(Error::precondition(format!(
            "descent by powers of {p} needs characteristic {p}, field has {}",
            field.characteristic()
        )));
    }
    let step = p
        .checked_pow(k)
        .and_then(|s| usize::try_from(s).ok())
        .ok_or_else(|| Error::precondition("p^k overflows"))?;
    if let Some(e) = poly.support().find(|e| e % step != 0) {
        return Err(Error::precondition(format!(
            "exponent {e} is not a multiple of {p}^{k}"
        )));
    }
    let mut coeffs: Vec<F::Elem> = poly.coeffs().iter().step_by(step).cloned().collect();
    for _ in 0..k {
        coeffs = coeffs
            .iter()
            .map(|c| field.frobenius_root(c))
            .collect::<Result<_>>()?;
    }
    Ok(UniPoly::new(field.clone(), coeffs))
}

/// `Some(α)` iff the monic `P` equals `(X - α)^d`.
pub fn is_linear_power<F: Field>(poly: &UniPoly<F>) -> Option<F::Elem> {
    let field = poly.ring();
    let d = poly.degree().filter(|&d| d >= 1)?;
    if !poly.is_monic() {
        return None;
    }
    let char = field.characteristic();
    let mut reduced = poly.clone();
    let mut rest = d;
    if !char.is_zero() {
        // char >= 2^64 cannot divide a usize degree
        if let Some(p) = char.to_u64() {
            let mut e = 0u32;
            while (rest as u64).is_multiple_of(p) {
                rest /= p as usize;
                e += 1;
            }
            if e > 0 {
                reduced = descend(poly, p, e).ok()?;
            }
        }
    }
    let d_elem = field.from_u64(rest as u64);
    let alpha = field.neg(&field.div(&reduced.coeff(rest - 1), &d_elem)?);
    let linear = UniPoly::new(field.clone(), vec![field.neg(&alpha), field.one()]);
    (linear.pow(rest as u64) == reduced).then_some(alpha)
}
