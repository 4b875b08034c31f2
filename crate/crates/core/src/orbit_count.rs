//! `T(n, k)` by Burnside's lemma over ordered pairs of conjugacy classes.
//!
//! For each pair `(ν1, ν2)` of cycle types the pair profile is expanded into
//! its fixed-subset row, weighted by the number of `(g1, g2)` with those
//! cycle types, and summed. The sum at every `k` must be divisible by
//! `n!²`; the quotient is `T(n, k)`.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::cache;
use crate::error::{Error, Result};
use crate::fixed_counts::{fixed_count_genfun, fixed_count_partition_sum, profile_pair, PARTITION_SUM_MAX_K};
use crate::partitions::{partition_count, Partition, Partitions};
use crate::scalar::{factorial, pow, Exact};
use crate::ExactInt;

/// Largest `n` computed without an explicit override.
pub const DEFAULT_ROW_LIMIT: u32 = 7;
/// Largest `n` computed with [`RowOptions::force`].
pub const FORCED_ROW_LIMIT: u32 = 8;

#[derive(Clone, Copy, Debug, Default)]
pub struct RowOptions {
    /// Permit `n = FORCED_ROW_LIMIT`.
    pub force: bool,
}

impl RowOptions {
    fn check(&self, n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::Argument("n must be positive".into()));
        }
        let limit = if self.force { FORCED_ROW_LIMIT } else { DEFAULT_ROW_LIMIT };
        if n > limit {
            return Err(Error::resource("row size n", n, limit));
        }
        Ok(())
    }
}

/// A full row `T(n, 0..=n!)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCache {
    pub n: u32,
    pub row: Vec<ExactInt>,
    pub format_version: u32,
    /// Leading 64 bits of the SHA-256 digest of the serialized row.
    pub checksum: u64,
}

impl RowCache {
    pub fn new(n: u32, row: Vec<ExactInt>) -> Self {
        let checksum = cache::row_checksum(n, &row);
        RowCache {
            n,
            row,
            format_version: cache::FORMAT_VERSION,
            checksum,
        }
    }

    /// `|S_n| = n!`, the largest admissible `k`.
    pub fn group_order(&self) -> u64 {
        (self.row.len() - 1) as u64
    }

    pub fn get(&self, k: u64) -> Option<&ExactInt> {
        self.row.get(usize::try_from(k).ok()?)
    }

    /// Checks length, endpoints, `T(n,1) = 1`, `T(n,2) = p(n) - 1` and the
    /// symmetry `T(n,k) = T(n,n!-k)`.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let order = factorial::<ExactInt>(self.n.into())
            .to_usize()
            .ok_or("n! does not fit in memory")?;
        if self.row.len() != order + 1 {
            return Err(format!("row length {} != n!+1 = {}", self.row.len(), order + 1));
        }
        let one = ExactInt::one();
        if self.row[0] != one || self.row[order] != one {
            return Err("endpoint values must be 1".into());
        }
        if order >= 1 && self.row[1] != one {
            return Err(format!("T(n,1) = {} != 1", self.row[1]));
        }
        if self.n >= 2 {
            let expected = ExactInt::from(partition_count(self.n) - 1);
            if self.row[2] != expected {
                return Err(format!("T(n,2) = {} != p(n)-1 = {expected}", self.row[2]));
            }
        }
        for k in 0..=order / 2 {
            if self.row[k] != self.row[order - k] {
                return Err(format!("asymmetric at k={k}"));
            }
        }
        Ok(())
    }

    /// First `k < n!/2` with `T(n,k) > T(n,k+1)`, if any.
    pub fn first_descent_before_middle(&self) -> Option<u64> {
        let order = self.row.len() - 1;
        (0..order / 2).find(|&k| self.row[k] > self.row[k + 1]).map(|k| k as u64)
    }
}

/// Ordered pairs of cycle types of `S_n`, in enumeration order.
pub fn class_pairs(n: u32) -> Vec<(Partition, Partition)> {
    let classes: Vec<Partition> = Partitions::new(n).collect();
    classes
        .iter()
        .flat_map(|a| classes.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn weight(nu1: &Partition, nu2: &Partition) -> ExactInt {
    nu1.class_size::<ExactInt>() * nu2.class_size::<ExactInt>()
}

fn add_into(mut acc: Vec<ExactInt>, other: Vec<ExactInt>) -> Vec<ExactInt> {
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
    acc
}

/// The undivided Burnside sums `S(k) = Σ_{(g1,g2)} #{fixed k-subsets}` for
/// `k = 0..=n!`.
pub fn burnside_sums(n: u32, opts: &RowOptions) -> Result<Vec<ExactInt>> {
    opts.check(n)?;
    let order = factorial::<ExactInt>(n.into()).to_u64().expect("n! fits u64");
    let len = order as usize + 1;
    let sums = class_pairs(n)
        .into_par_iter()
        .map(|(nu1, nu2)| {
            let profile = profile_pair(&nu1, &nu2);
            let w = weight(&nu1, &nu2);
            fixed_count_genfun(&profile, order)
                .expect("k_max = n! is in range")
                .into_iter()
                .map(|c| c * &w)
                .collect::<Vec<_>>()
        })
        .reduce(|| vec![ExactInt::zero(); len], add_into);
    Ok(sums)
}

/// Full row `T(n, 0..=n!)` for `1 ≤ n ≤ 7` (or `8` when forced).
///
/// Panics if a Burnside sum is not divisible by `n!²` or the row violates
/// a structural identity; either signals a formula bug.
pub fn t_row(n: u32) -> Result<RowCache> {
    t_row_with(n, &RowOptions::default())
}

pub fn t_row_with(n: u32, opts: &RowOptions) -> Result<RowCache> {
    let sums = burnside_sums(n, opts)?;
    let order = factorial::<ExactInt>(n.into());
    let group = &order * &order;
    let row = sums
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            let (q, r) = s.div_rem(&group);
            assert!(r.is_zero(), "Burnside sum at n={n}, k={k} not divisible by n!^2");
            q
        })
        .collect();
    let cache = RowCache::new(n, row);
    if let Err(e) = cache.validate() {
        panic!("row n={n} violates a structural identity: {e}");
    }
    Ok(cache)
}

/// Single value `T(n, k)`. For `k ≤ 30` the value is recomputed through
/// the partition-sum evaluator and the two are asserted equal.
pub fn t_value(n: u32, k: u64) -> Result<ExactInt> {
    t_value_with(n, k, &RowOptions::default())
}

pub fn t_value_with(n: u32, k: u64, opts: &RowOptions) -> Result<ExactInt> {
    opts.check(n)?;
    check_k(n, k)?;
    let row = t_row_with(n, opts)?;
    value_from_row(&row, k)
}

/// `T(n, k)` read from an existing row, with the same small-`k` cross-check
/// as [`t_value`].
pub fn value_from_row(row: &RowCache, k: u64) -> Result<ExactInt> {
    check_k(row.n, k)?;
    let value = row.row[k as usize].clone();
    if k <= PARTITION_SUM_MAX_K {
        let other = t_value_partition_sum(row.n, k)?;
        assert_eq!(value, other, "evaluators disagree at T({}, {k})", row.n);
    }
    Ok(value)
}

fn check_k(n: u32, k: u64) -> Result<()> {
    let order = factorial::<ExactInt>(n.into());
    if ExactInt::from(k) > order {
        return Err(Error::Argument(format!("k = {k} outside [0, {n}!] = [0, {order}]")));
    }
    Ok(())
}

/// `T(n, k)` through the partition-sum evaluator alone (`k ≤ 30`).
pub fn t_value_partition_sum(n: u32, k: u64) -> Result<ExactInt> {
    check_k(n, k)?;
    let order = factorial::<ExactInt>(n.into());
    let mut sum = ExactInt::zero();
    for (nu1, nu2) in class_pairs(n) {
        let fixed = fixed_count_partition_sum(&profile_pair(&nu1, &nu2), k)?;
        sum += fixed * weight(&nu1, &nu2);
    }
    Ok(sum.divide_exact(&(&order * &order)))
}

/// `Σ_k T(n,k)` computed without the row, as
/// `n!⁻² Σ_pairs |C1||C2| 2^{#cycles of the pair action}`.
pub fn row_sum_via_cycles(n: u32) -> ExactInt {
    let order = factorial::<ExactInt>(n.into());
    let two = ExactInt::from(2u32);
    let mut sum = ExactInt::zero();
    for (nu1, nu2) in class_pairs(n) {
        let cycles = profile_pair(&nu1, &nu2).num_cycles().to_u64().expect("cycle count fits u64");
        sum += weight(&nu1, &nu2) * pow(&two, cycles);
    }
    sum.divide_exact(&(&order * &order))
}
