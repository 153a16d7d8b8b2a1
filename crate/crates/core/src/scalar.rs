//! Coefficient scalar abstraction.
//!
//! The polynomial and series algebra is generic over the scalar type; the
//! only instantiation the rest of the crate uses is [`crate::Rat`]
//! (arbitrary-precision rationals), which keeps every operation exact.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed};

/// A coefficient scalar: a field element with exact construction from small
/// integers. `num_traits::Signed` supplies the ring operations, zero/one and
/// sign queries; `FromPrimitive` supplies integer embedding.
pub trait Scalar:
    Clone + Debug + Display + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("small integer embeds into any scalar")
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_int(num) / Self::from_int(den)
    }

    fn one_half() -> Self {
        Self::from_ratio(1, 2)
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + Signed + FromPrimitive + Send + Sync + 'static
{
}

/// `base^exp` with integer (possibly negative) exponent.
pub fn pow_int<C: Scalar>(base: &C, exp: i64) -> C {
    let mut acc = C::one();
    for _ in 0..exp.unsigned_abs() {
        acc = acc * base.clone();
    }
    if exp < 0 {
        C::one() / acc
    } else {
        acc
    }
}
