//! Numerical checks of the large-`n` behaviour of `T(n, k)` and of the
//! auxiliary bounds behind it.
//!
//! Every pass/fail decision is taken in exact arithmetic; floats appear only
//! in reported values.

pub mod bounds;
pub mod classical;
pub mod problem5;
pub mod ratio;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::orbit_count::RowCache;
use crate::partitions::Partitions;
use crate::poly::binomial;
use crate::scalar::{factorial, pow};
use crate::ExactInt;
pub use ratio::ExactRatio;

/// Largest `n` accepted by [`x_n_check`].
pub const XN_MAX_N: u32 = 40;

fn order_u64(n: u32) -> Result<u64> {
    factorial::<ExactInt>(n.into())
        .to_u64()
        .ok_or_else(|| Error::resource("group order n!", u128::MAX, u64::MAX))
}

/// `Λ_n(k) = binom(n!, k) / n!²`, the orbit count if every orbit had the
/// maximal size `n!²`.
pub fn lambda_nk(n: u32, k: u64) -> Result<ExactRatio> {
    let order = factorial::<ExactInt>(n.into());
    if ExactInt::from(k) > order {
        return Err(Error::Argument(format!("k = {k} outside [0, {n}!]")));
    }
    let num = binomial(&order, k);
    Ok(ExactRatio::from_unsigned(num, &order * &order))
}

/// `Λ_n = Λ_n(n!/2)`.
pub fn lambda_center(n: u32) -> Result<ExactRatio> {
    let order = order_u64(n)?;
    lambda_nk(n, order / 2)
}

/// `k_n(x) = ⌊n!/2 + x·sqrt(n!/4)⌋`.
pub fn k_n(order: u64, x: f64) -> i64 {
    let o = order as f64;
    (o / 2.0 + x * (o / 4.0).sqrt()).floor() as i64
}

/// `B_n(x) = T(n, k_n(x)) / Λ_n`, zero when `k_n(x)` falls outside
/// `[0, n!]`.
pub fn b_n_x(row: &RowCache, x: f64) -> Result<f64> {
    let center = lambda_center(row.n)?;
    Ok(b_n_x_with(row, &center, x))
}

fn b_n_x_with(row: &RowCache, center: &ExactRatio, x: f64) -> f64 {
    let k = k_n(row.group_order(), x);
    if k < 0 || k as u64 > row.group_order() {
        return 0.0;
    }
    let t = BigInt::from(row.row[k as usize].clone());
    // T / (num/den) = T·den / num
    ExactRatio::new(t * center.den(), center.num().clone())
        .expect("Λ_n > 0")
        .to_f64()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BnxPoint {
    pub x: f64,
    pub k: i64,
    pub b_n_x: f64,
    pub gauss: f64,
    pub abs_err: f64,
}

/// `x_min, x_min + step, …, x_max`, with the count fixed by rounding
/// `(x_max - x_min)/step` and each point rounded to 10 decimals.
pub fn x_grid(x_min: f64, x_max: f64, step: f64) -> Result<Vec<f64>> {
    if !(step.is_finite() && step > 0.0 && x_min.is_finite() && x_max.is_finite() && x_max >= x_min) {
        return Err(Error::Argument(format!("bad grid [{x_min}, {x_max}] step {step}")));
    }
    let count = ((x_max - x_min) / step).round() as i64 + 1;
    if count > 10_000_000 {
        return Err(Error::resource("grid points", count as u64, 10_000_000u64));
    }
    Ok((0..count)
        .map(|i| ((x_min + i as f64 * step) * 1e10).round() / 1e10)
        .collect())
}

/// The default grid `-4.0, -3.9, …, 4.0`.
pub fn default_x_grid() -> Vec<f64> {
    x_grid(-4.0, 4.0, 0.1).expect("valid default grid")
}

pub fn b_n_x_series(row: &RowCache, grid: &[f64]) -> Result<Vec<BnxPoint>> {
    let center = lambda_center(row.n)?;
    Ok(grid
        .iter()
        .map(|&x| {
            let b = b_n_x_with(row, &center, x);
            let gauss = (-x * x / 2.0).exp();
            BnxPoint {
                x,
                k: k_n(row.group_order(), x),
                b_n_x: b,
                gauss,
                abs_err: (b - gauss).abs(),
            }
        })
        .collect())
}

/// `sup_x |B_n(x) − exp(−x²/2)|` over the series.
pub fn sup_error(points: &[BnxPoint]) -> f64 {
    points.iter().map(|p| p.abs_err).fold(0.0, f64::max)
}

/// `R(n, k) = T(n,k)/Λ_n(k) − 1`, defined for `3 ≤ k ≤ n! − 3`.
pub fn r_nk(row: &RowCache, k: u64) -> Result<ExactRatio> {
    let order = row.group_order();
    if k < 3 || k + 3 > order {
        return Err(Error::Argument(format!(
            "R(n,k) requires 3 <= k <= n!-3 = {}, got k = {k}",
            order.saturating_sub(3)
        )));
    }
    let n_fact = BigInt::from(order);
    let choose = BigInt::from(binomial(&ExactInt::from(order), k));
    let t = BigInt::from(row.row[k as usize].clone());
    Ok(ExactRatio::new(t * &n_fact * &n_fact - &choose, choose).expect("binomial > 0"))
}

#[derive(Clone, Debug)]
pub struct RnkPoint {
    pub k: u64,
    pub r: ExactRatio,
    pub n2_r: ExactRatio,
}

/// `R(n,k)` and `n²·R(n,k)` for every `k ∈ [3, n!−3]`.
pub fn r_nk_series(row: &RowCache) -> Vec<RnkPoint> {
    let n2 = BigInt::from(u64::from(row.n) * u64::from(row.n));
    (3..=row.group_order().saturating_sub(3))
        .map(|k| {
            let r = r_nk(row, k).expect("k in domain");
            let n2_r = r.mul_int(&n2);
            RnkPoint { k, r, n2_r }
        })
        .collect()
}

/// `max_k n²·R(n,k)` over `[3, n!−3]` and its first maximizer.
pub fn max_n2_r(row: &RowCache) -> Option<RnkPoint> {
    r_nk_series(row)
        .into_iter()
        .reduce(|best, p| if p.n2_r > best.n2_r { p } else { best })
}

/// `n^{max(2, k−4)}·R(n,k)`, the scaled excess at a fixed `k`.
pub fn scaled_excess(row: &RowCache, k: u64) -> Result<ExactRatio> {
    let r = r_nk(row, k)?;
    let e = k.saturating_sub(4).max(2);
    Ok(r.mul_int(&pow(&BigInt::from(row.n), e)))
}

/// First `k` with `T(n,k) < Λ_n(k)`, i.e. `T·n!² < binom(n!,k)`.
pub fn lower_bound_violation(row: &RowCache) -> Option<u64> {
    let order = ExactInt::from(row.group_order());
    let sq = &order * &order;
    (0..=row.group_order()).find(|&k| &row.row[k as usize] * &sq < binomial(&order, k))
}

/// `T(n,k_n(x))² / (T(n,k_n(x+y))·T(n,k_n(x−y)))`, whose limit is
/// `e^{y²}`. `None` when a denominator term is zero.
pub fn log_concavity_ratio(row: &RowCache, x: f64, y: f64) -> Option<f64> {
    let at = |x: f64| -> ExactInt {
        let k = k_n(row.group_order(), x);
        if k < 0 || k as u64 > row.group_order() {
            ExactInt::zero()
        } else {
            row.row[k as usize].clone()
        }
    };
    let mid = at(x);
    let den = at(x + y) * at(x - y);
    if den.is_zero() {
        return None;
    }
    Some(ExactRatio::from_unsigned(&mid * &mid, den).to_f64())
}

#[derive(Clone, Debug, PartialEq)]
pub struct XnRow {
    pub n: u32,
    /// `X_n = Σ_{ν⊢n} z_ν − n!`.
    pub x_n: ExactInt,
    /// `X_n·n² / (2·n!)`, which tends to 1.
    pub ratio: f64,
}

/// `X_n` by direct summation over partitions, for `n = 1..=n_max`.
pub fn x_n_check(n_max: u32) -> Result<Vec<XnRow>> {
    if n_max > XN_MAX_N {
        return Err(Error::resource("X_n size n", n_max, XN_MAX_N));
    }
    Ok((1..=n_max)
        .map(|n| {
            let order = factorial::<ExactInt>(n.into());
            let sum: ExactInt = Partitions::new(n).map(|nu| nu.z_value::<ExactInt>()).sum();
            let x_n = sum - &order;
            let n2 = u64::from(n) * u64::from(n);
            let ratio = ExactRatio::from_unsigned(&x_n * n2, order * 2u32).to_f64();
            XnRow { n, x_n, ratio }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit_count::t_row;

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_nk(3, 0).unwrap(), ExactRatio::new(1, 36).unwrap());
        assert_eq!(lambda_nk(3, 3).unwrap(), ExactRatio::new(20, 36).unwrap());
        assert_eq!(lambda_nk(4, 12).unwrap(), ExactRatio::new(2_704_156, 576).unwrap());
        assert!(lambda_nk(3, 7).is_err());
    }

    #[test]
    fn r_examples() {
        let row3 = t_row(3).unwrap();
        assert_eq!(r_nk(&row3, 3).unwrap(), ExactRatio::new(13, 5).unwrap());
        let row4 = t_row(4).unwrap();
        let expected = ExactRatio::new(5050i64 * 576 - 2_704_156, 2_704_156).unwrap();
        assert_eq!(r_nk(&row4, 12).unwrap(), expected);
        for k in [0, 1, 2, 22, 23, 24] {
            assert!(matches!(r_nk(&row4, k), Err(Error::Argument(_))), "k={k}");
        }
        assert!(r_nk(&row4, 21).is_ok());
    }

    #[test]
    fn b_n_x_edges() {
        let row = t_row(4).unwrap();
        assert_eq!(b_n_x(&row, -100.0).unwrap(), 0.0);
        assert_eq!(b_n_x(&row, 100.0).unwrap(), 0.0);
        let center = b_n_x(&row, 0.0).unwrap();
        let expect = ExactRatio::new(5050i64 * 576, 2_704_156).unwrap().to_f64();
        assert!((center - expect).abs() < 1e-12);
    }

    #[test]
    fn grid_has_81_points() {
        let g = default_x_grid();
        assert_eq!(g.len(), 81);
        assert_eq!(g[0], -4.0);
        assert_eq!(g[39], -0.1);
        assert_eq!(g[80], 4.0);
        assert!(x_grid(1.0, 0.0, 0.1).is_err());
        assert!(x_grid(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn x_n_small() {
        let rows = x_n_check(3).unwrap();
        assert_eq!(rows[0].x_n, ExactInt::zero());
        assert_eq!(rows[1].x_n, ExactInt::from(2u32));
        assert_eq!(rows[2].x_n, ExactInt::from(5u32));
        assert!(x_n_check(41).is_err());
    }

    #[test]
    fn lower_bound_holds_small() {
        for n in 1..=5 {
            assert_eq!(lower_bound_violation(&t_row(n).unwrap()), None);
        }
    }
}
