//! Exact arithmetic: integers, rationals, prime and extension fields, and
//! the binomial number theory behind the elimination cascade.

mod descriptor;
mod ext_field;
mod number_theory;
mod prime_field;
mod ring;

pub use descriptor::FieldDescriptor;
pub use ext_field::{find_irreducible, is_irreducible, ExtField};
pub use number_theory::{
    binom_mod_p, binomial, is_prime, is_prime_u64, is_prime_with, kummer_carries, valuation,
    valuation_u64, Prime, Valuation, DEFAULT_MR_ROUNDS,
};
pub use prime_field::{BigPrimeField, PrimeField, FAST_PATH_LIMIT};
pub use ring::{Field, FiniteField, IntegralDomain, NumRing, Ring, Scalar};

/// `c^(1/p)` in a perfect field of characteristic `p`.
pub fn frobenius_root<F: Field>(field: &F, c: &F::Elem) -> crate::Result<F::Elem> {
    field.frobenius_root(c)
}
