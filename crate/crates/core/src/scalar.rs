//! Coefficient types.
//!
//! Everything polynomial in this crate is generic over [`Scalar`]. The exact
//! counting code instantiates it with [`crate::Rational`]; the generic path
//! also works with `Rational64` or `f64` for quick experiments.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// A commutative field-like coefficient type.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("scalar type cannot represent a small integer")
    }

    fn from_uint(value: u64) -> Self {
        Self::from_u64(value).expect("scalar type cannot represent a small integer")
    }

    /// Exact inverse of a non-zero element.
    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}

/// Canonical integer embedding into the exact rationals.
pub fn rat(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn rat_from_big(value: BigInt) -> BigRational {
    BigRational::from_integer(value)
}

/// Returns the integer value of `q` when its denominator is one.
pub fn to_integer(q: &BigRational) -> Option<BigInt> {
    if q.denom().is_one() {
        Some(q.numer().clone())
    } else {
        None
    }
}

/// Renders a rational as `p/q`, or `p` for integers.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_negative(q: &BigRational) -> bool {
    q.is_negative()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `n! / prod(parts!)` for non-negative parts summing to `n`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let n: u64 = parts.iter().sum();
    let mut out = factorial(n);
    for &p in parts {
        out /= factorial(p);
    }
    out
}

/// Same as [`multinomial`] but for signed exponent differences; zero when any
/// part is negative.
pub fn multinomial_signed(parts: &[i64]) -> BigInt {
    if parts.iter().any(|&p| p < 0) {
        return BigInt::zero();
    }
    let parts: Vec<u64> = parts.iter().map(|&p| p as u64).collect();
    multinomial(&parts)
}
