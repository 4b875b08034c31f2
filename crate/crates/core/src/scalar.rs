//! Scalar abstractions.
//!
//! Counting code is written against [`Exact`], an unsigned exact integer.
//! Production paths instantiate it with [`crate::ExactInt`] (arbitrary
//! precision); small oracles and tests may use machine integers such as
//! `u64` or `u128`, which panic on overflow in debug builds.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_integer::Integer;
use num_traits::{FromPrimitive, ToPrimitive};

/// An exact, unsigned integer type usable as a coefficient or count.
pub trait Exact:
    Integer
    + Clone
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Send
    + Sync
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Lossless conversion from `u64`.
    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("value does not fit the scalar type")
    }

    /// `self * other` without consuming either operand.
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out *= other;
        out
    }

    /// Exact division; panics if `divisor` does not divide `self`.
    fn divide_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact division: {self} / {divisor}");
        q
    }
}

impl<T> Exact for T where
    T: Integer
        + Clone
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Sum
        + Send
        + Sync
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> MulAssign<&'a T>
{
}

/// `n!` in the scalar type `C`.
pub fn factorial<C: Exact>(n: u64) -> C {
    let mut acc = C::one();
    for i in 2..=n {
        acc *= &C::from_u64_exact(i);
    }
    acc
}

/// `base^exp` by binary exponentiation.
pub fn pow<C: Exact>(base: &C, mut exp: u64) -> C {
    let mut acc = C::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            let s = sq.clone();
            sq *= &s;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial::<u64>(0), 1);
        assert_eq!(factorial::<u64>(5), 120);
        assert_eq!(factorial::<BigUint>(20), BigUint::from(2_432_902_008_176_640_000u64));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        for b in 0u64..6 {
            for e in 0u64..10 {
                assert_eq!(pow(&(b as u128), e), (b as u128).pow(e as u32));
            }
        }
    }

    #[test]
    #[should_panic(expected = "inexact division")]
    fn div_exact_rejects_remainder() {
        let _ = 7u64.divide_exact(&2);
    }
}
