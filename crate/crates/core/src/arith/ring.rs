//! Coefficient-ring abstractions.
//!
//! Rings are context objects: the modulus of `F_p` or the defining
//! polynomial of `F_{p^m}` is a runtime value, so elements never carry
//! their own arithmetic. Context-free scalars (big integers, rationals)
//! plug in through [`NumRing`], which is generic over any `num-traits`
//! scalar implementing [`Scalar`].

use std::fmt::{self, Debug, Display};
use std::marker::PhantomData;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::descriptor::FieldDescriptor;
use crate::error::{Error, Result};

/// A commutative ring with identity.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Zero for `Z`, `Q` and coefficient rings over them.
    fn characteristic(&self) -> BigUint;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn from_u64(&self, n: u64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Rough cost of an element, used to pick cheap pivots.
    fn size_hint(&self, _a: &Self::Elem) -> usize {
        1
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for bit in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(bit) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }
}

/// A ring without zero divisors in which exact quotients can be computed.
pub trait IntegralDomain: Ring {
    /// `a / b` when `b` divides `a`; `None` otherwise (including `b = 0`).
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}

pub trait Field: IntegralDomain {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// The unique `r` with `r^p = a`, where `p` is the characteristic.
    fn frobenius_root(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn descriptor(&self) -> FieldDescriptor;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// A finite field whose elements can be enumerated by index.
pub trait FiniteField: Field {
    /// The characteristic as a machine word.
    fn prime(&self) -> u64;
    fn order(&self) -> u64;
    /// Element number `index` in the canonical enumeration, `index < order()`.
    fn element(&self, index: u64) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u64;
}

/// Exact scalars usable through [`NumRing`].
pub trait Scalar:
    num_traits::Num + Signed + Clone + Debug + Display + Send + Sync + 'static
{
    fn from_bigint(n: &BigInt) -> Self;
    fn try_div_exact(a: &Self, b: &Self) -> Option<Self>;
    fn is_field() -> bool;
}

impl Scalar for BigInt {
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }

    fn try_div_exact(a: &Self, b: &Self) -> Option<Self> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }

    fn is_field() -> bool {
        false
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn try_div_exact(a: &Self, b: &Self) -> Option<Self> {
        (!b.is_zero()).then(|| a / b)
    }

    fn is_field() -> bool {
        true
    }
}

/// The ring of a context-free `num-traits` scalar type.
pub struct NumRing<T>(PhantomData<fn() -> T>);

impl<T> NumRing<T> {
    pub const fn new() -> Self {
        NumRing(PhantomData)
    }
}

impl<T> Default for NumRing<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for NumRing<T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for NumRing<T> {}

impl<T> PartialEq for NumRing<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T> Eq for NumRing<T> {}

impl<T> Debug for NumRing<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumRing<{}>", std::any::type_name::<T>())
    }
}

impl<T: Scalar> Ring for NumRing<T> {
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }

    fn one(&self) -> T {
        T::one()
    }

    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }

    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }

    fn neg(&self, a: &T) -> T {
        -a.clone()
    }

    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }

    fn from_bigint(&self, n: &BigInt) -> T {
        T::from_bigint(n)
    }

    fn characteristic(&self) -> BigUint {
        BigUint::zero()
    }

    fn format_elem(&self, a: &T) -> String {
        a.to_string()
    }

    fn is_one(&self, a: &T) -> bool {
        a.is_one()
    }
}

impl<T: Scalar> IntegralDomain for NumRing<T> {
    fn div_exact(&self, a: &T, b: &T) -> Option<T> {
        T::try_div_exact(a, b)
    }
}

impl Field for NumRing<BigRational> {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn frobenius_root(&self, _a: &BigRational) -> Result<BigRational> {
        Err(Error::UnsupportedField {
            field: "Q".into(),
            op: "frobenius_root",
        })
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integers, Rationals};

    #[test]
    fn integer_exact_division() {
        let z = Integers::new();
        assert_eq!(
            z.div_exact(&BigInt::from(12), &BigInt::from(-4)),
            Some(BigInt::from(-3))
        );
        assert_eq!(z.div_exact(&BigInt::from(12), &BigInt::from(5)), None);
        assert_eq!(z.div_exact(&BigInt::from(1), &BigInt::from(0)), None);
    }

    #[test]
    fn rational_inverse_and_frobenius() {
        let q = Rationals::new();
        let two_thirds = BigRational::new(2.into(), 3.into());
        assert_eq!(
            q.inv(&two_thirds),
            Some(BigRational::new(3.into(), 2.into()))
        );
        assert!(q.inv(&q.zero()).is_none());
        assert!(matches!(
            q.frobenius_root(&two_thirds),
            Err(Error::UnsupportedField { .. })
        ));
    }

    #[test]
    fn pow_variants_agree() {
        let z = Integers::new();
        let three = z.from_i64(3);
        assert_eq!(z.pow(&three, 13), z.pow_big(&three, &BigUint::from(13u32)));
        assert_eq!(z.pow(&three, 0), z.one());
    }
}
