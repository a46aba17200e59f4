//! Exact algebra for the Casas-Alvero problem: finite-field and rational
//! arithmetic, univariate and weighted multivariate polynomials, and the
//! counterexample searches and certificates built on them.
//!
//! Rings are runtime context objects (a prime field carries its modulus), so
//! arithmetic goes through [`arith::Ring`] rather than operator traits on the
//! element type. Integer and rational scalars come from `num-traits` types
//! through [`arith::NumRing`]; the aliases below fix the common instances.

pub mod arith;
pub mod casas;
pub mod determinant;
pub mod error;
pub mod multipoly;
pub mod report;
pub mod unipoly;

pub use arith::{BigPrimeField, ExtField, FieldDescriptor, NumRing, Prime, PrimeField};
pub use error::{Error, Result};
pub use unipoly::UniPoly;

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub type Integers = NumRing<Integer>;
pub type Rationals = NumRing<Rational>;

pub type ZPoly = UniPoly<Integers>;
pub type QPoly = UniPoly<Rationals>;
pub type FpPoly = UniPoly<PrimeField>;
pub type FqPoly = UniPoly<ExtField>;

pub type ZMultiPoly = multipoly::MultiPoly<Integers>;
pub type FpMultiPoly = multipoly::MultiPoly<PrimeField>;
