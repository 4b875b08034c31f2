use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Float, Signed, Zero};

use crate::error::{Error, Result};
use crate::{ExactInt, SignedInt};

/// A signed rational `num/den` with `den > 0`, not necessarily reduced.
/// Equality and ordering compare values by cross-multiplication.
#[derive(Clone, Debug)]
pub struct ExactRatio {
    num: SignedInt,
    den: SignedInt,
}

impl ExactRatio {
    pub fn new(num: impl Into<SignedInt>, den: impl Into<SignedInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::Argument("zero denominator".into()));
        }
        Ok(if den.is_negative() {
            ExactRatio { num: -num, den: -den }
        } else {
            ExactRatio { num, den }
        })
    }

    /// Nonnegative ratio of two exact integers; panics on a zero denominator.
    pub fn from_unsigned(num: ExactInt, den: ExactInt) -> Self {
        Self::new(BigInt::from(num), BigInt::from(den)).expect("nonzero denominator")
    }

    pub fn integer(v: impl Into<SignedInt>) -> Self {
        ExactRatio { num: v.into(), den: BigInt::from(1) }
    }

    pub fn num(&self) -> &SignedInt {
        &self.num
    }

    pub fn den(&self) -> &SignedInt {
        &self.den
    }

    pub fn reduced(&self) -> Self {
        let g = self.num.gcd(&self.den);
        if g.is_zero() {
            return self.clone();
        }
        ExactRatio { num: &self.num / &g, den: &self.den / &g }
    }

    pub fn sub_int(&self, v: &SignedInt) -> Self {
        ExactRatio { num: &self.num - v * &self.den, den: self.den.clone() }
    }

    pub fn mul_int(&self, v: &SignedInt) -> Self {
        ExactRatio { num: &self.num * v, den: self.den.clone() }
    }

    pub fn mul(&self, other: &ExactRatio) -> Self {
        ExactRatio { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// Converts to a float with relative error on the order of one ulp.
    ///
    /// The quotient is formed in integer arithmetic with at least 126
    /// significant bits before rounding, so inputs far outside the float
    /// range (thousands of bits) convert without overflow as long as the
    /// value itself is representable.
    pub fn to_float<F: Float>(&self) -> F {
        if self.num.is_zero() {
            return F::zero();
        }
        let a = self.num.magnitude();
        let b = self.den.magnitude();
        // q = floor(a·2^s / b) lies in [2^126, 2^128)
        let s = 127 - (a.bits() as i64 - b.bits() as i64);
        let q: ExactInt = if s >= 0 { (a << s as u64) / b } else { a / (b << (-s) as u64) };
        let shift = q.bits().saturating_sub(64);
        let top: u64 = (&q >> shift).try_into().expect("64 significant bits");
        let mant = F::from(top).expect("u64 converts to float");
        let exp = shift as i64 - s;
        let value = ldexp(mant, exp);
        if self.num.sign() == Sign::Minus {
            -value
        } else {
            value
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_float::<f64>()
    }
}

/// `x · 2^e`, scaling in bounded steps so intermediates stay finite.
fn ldexp<F: Float>(mut x: F, mut e: i64) -> F {
    let step = F::from(2.0f64.powi(60)).expect("2^60 is representable");
    while e > 60 && x.is_finite() {
        x = x * step;
        e -= 60;
    }
    while e < -60 && !x.is_zero() {
        x = x / step;
        e += 60;
    }
    x * F::from(2.0f64.powi(e as i32)).expect("small power of two")
}

impl PartialEq for ExactRatio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExactRatio {}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn r(a: i64, b: i64) -> ExactRatio {
        ExactRatio::new(a, b).unwrap()
    }

    #[test]
    fn basics() {
        assert_eq!(r(1, 2).to_f64(), 0.5);
        assert!((r(20, 36).to_f64() - 5.0 / 9.0).abs() < 1e-15);
        assert_eq!(r(-3, 4).to_f64(), -0.75);
        assert_eq!(r(3, -4), r(-6, 8));
        assert!(r(1, 3) < r(1, 2));
        assert_eq!(r(0, 5).to_f64(), 0.0);
        assert!(ExactRatio::new(1, 0).is_err());
        assert_eq!(r(1, 3).to_float::<f32>(), 1.0f32 / 3.0);
        assert_eq!(r(6, 8).reduced().to_string(), "3/4");
    }

    #[test]
    fn extreme_magnitudes() {
        let huge = BigUint::from(1u32) << 5000u32;
        let x = ExactRatio::from_unsigned(huge.clone() * 3u32, huge.clone() << 1u32);
        assert_eq!(x.to_f64(), 1.5);
        let tiny = ExactRatio::from_unsigned(BigUint::from(1u32), huge.clone());
        assert_eq!(tiny.to_f64(), 0.0);
        let big = ExactRatio::from_unsigned(huge, BigUint::from(1u32));
        assert!(big.to_f64().is_infinite());
        let small_normal = ExactRatio::from_unsigned(BigUint::from(1u32), BigUint::from(1u32) << 1000u32);
        assert_eq!(small_normal.to_f64(), 2f64.powi(-1000));
    }

    proptest! {
        /// |to_float(a/b)·b − a| / a ≤ 1e-12 for ~2000-bit operands, checked
        /// exactly by converting the float back to a rational.
        #[test]
        fn float_conversion_relative_error(
            a_digits in proptest::collection::vec(any::<u32>(), 55..63),
            b_digits in proptest::collection::vec(any::<u32>(), 55..63),
        ) {
            let a = BigUint::new(a_digits) + 1u32;
            let b = BigUint::new(b_digits) + 1u32;
            let x = ExactRatio::from_unsigned(a.clone(), b.clone()).to_f64();
            prop_assume!(x.is_finite() && x > 0.0);
            // x = m·2^e exactly
            let bits = x.to_bits();
            let exp = ((bits >> 52) & 0x7ff) as i64;
            let m = BigUint::from((bits & ((1u64 << 52) - 1)) | (1u64 << 52));
            let e = exp - 1075;
            // compare |x·b − a| against a·1e-12 in integers scaled by 2^|e|
            let (xb, a_scaled) = if e >= 0 {
                ((m * &b) << e as u64, a.clone())
            } else {
                (m * &b, a.clone() << (-e) as u64)
            };
            let diff = if xb > a_scaled { &xb - &a_scaled } else { &a_scaled - &xb };
            prop_assert!(diff * BigUint::from(1_000_000_000_000u64) <= a_scaled);
        }
    }
}
