//! Brute-force maximum of `z_{ν^m} / z_ν` over `ν ⊢ n`, compared with the
//! closed form attained by `t` cycles of length `m`:
//!
//! `n! / ((n − t·m)! · m^t · t!)`, `t = ⌈(n + 2 − (n+2)^{1/m}) / m⌉ − 1`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::partitions::{Partition, Partitions};
use crate::scalar::{factorial, pow};
use crate::{ExactInt, ExactRatio};

pub const PROBLEM5_MAX_N: u32 = 25;
pub const PROBLEM5_MAX_M: u64 = 6;

#[derive(Clone, Debug)]
pub struct Problem5Result {
    pub n: u32,
    pub m: u64,
    /// First partition in enumeration order attaining the maximum.
    pub maximizer: Partition,
    pub ratio: ExactRatio,
    pub t: u64,
    pub closed_form: ExactRatio,
    pub agree: bool,
}

/// Largest `r` with `r^m ≤ x`.
pub fn integer_root(x: u64, m: u32) -> u64 {
    assert!(m >= 1);
    let mut r = (x as f64).powf(1.0 / f64::from(m)).round() as u64;
    let fits = |r: u64| r.checked_pow(m).is_some_and(|v| v <= x);
    while r > 0 && !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

/// `t_{n,m}`. With `r = ⌊(n+2)^{1/m}⌋` the ceiling equals `⌈(n+2−r)/m⌉`
/// whether or not `n+2` is a perfect `m`-th power, so no floating point
/// enters the ceiling.
pub fn t_nm(n: u32, m: u64) -> u64 {
    let x = u64::from(n) + 2;
    let r = integer_root(x, m as u32);
    (x - r).div_ceil(m) - 1
}

/// `n! / ((n − t·m)! · m^t · t!)`.
pub fn closed_form(n: u32, m: u64, t: u64) -> ExactInt {
    let rest = u64::from(n) - t * m;
    let den = factorial::<ExactInt>(rest) * pow(&ExactInt::from(m), t) * factorial::<ExactInt>(t);
    let (q, r) = factorial::<ExactInt>(n.into()).div_rem(&den);
    assert!(num_traits::Zero::is_zero(&r), "closed form is a class size");
    q
}

pub fn problem5_max_ratio(n: u32, m: u64) -> Result<Problem5Result> {
    if n > PROBLEM5_MAX_N {
        return Err(Error::resource("power-ratio n", n, PROBLEM5_MAX_N));
    }
    if m == 0 || m > PROBLEM5_MAX_M {
        return Err(Error::Argument(format!("m = {m} outside [1, {PROBLEM5_MAX_M}]")));
    }
    let mut best: Option<(Partition, ExactRatio)> = None;
    for nu in Partitions::new(n) {
        let ratio = ExactRatio::from_unsigned(nu.power(m).z_value(), nu.z_value());
        if best.as_ref().is_none_or(|(_, b)| ratio > *b) {
            best = Some((nu, ratio));
        }
    }
    let (maximizer, ratio) = best.expect("at least one partition");
    let t = t_nm(n, m);
    let closed = ExactRatio::from_unsigned(closed_form(n, m, t), ExactInt::from(1u32));
    let agree = closed == ratio;
    Ok(Problem5Result {
        n,
        m,
        maximizer,
        ratio,
        t,
        closed_form: closed,
        agree,
    })
}
