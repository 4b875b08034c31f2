//! Period profiles and the number of `k`-subsets fixed by a single group
//! element.
//!
//! For an element `g` acting on a finite set `X`, its period profile records
//! `|T(j)|`, the number of points whose exact period under `g` is `j`. The
//! fixed `k`-subsets of `g` are exactly the unions of `g`-cycles, so their
//! number depends only on the profile. Two evaluators are provided:
//!
//! * [`fixed_count_partition_sum`] sums, over partitions `λ ⊢ k`, the product
//!   `∏_j binom(|T(j)|/j, m_j(λ))`, choosing `m_j(λ)` cycles of length `j`.
//! * [`fixed_count_genfun`] reads the same numbers off the coefficients of
//!   `∏_j (1 + x^j)^{|T(j)|/j}` and produces a whole row at once.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{divisors, mobius, Partition, Partitions};
use crate::perm::{cycle_lengths, factorial_u64, Perm, PermutationRank};
use crate::poly::{binomial, binomial_factor, mul_truncated};
use crate::scalar::{factorial, Exact};
use crate::ExactInt;

/// Largest `n` for which [`profile_from_pair_action`] materializes `S_n`.
pub const PAIR_ACTION_MAX_N: u32 = 8;

/// Largest `k` accepted by [`fixed_count_partition_sum`].
pub const PARTITION_SUM_MAX_K: u64 = 30;

/// Exact-period histogram of a permutation of a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodProfile<C: Exact = ExactInt> {
    total: C,
    entries: BTreeMap<u64, C>,
}

impl<C: Exact> PeriodProfile<C> {
    /// Validates and builds a profile from `(period, count)` pairs. Zero
    /// counts are dropped; every period must divide its count and the
    /// counts must sum to `total`.
    pub fn new(total: C, entries: impl IntoIterator<Item = (u64, C)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut sum = C::zero();
        for (j, count) in entries {
            if j == 0 {
                return Err(Error::Profile("period 0".into()));
            }
            if count.is_zero() {
                continue;
            }
            if !count.is_multiple_of(&C::from_u64_exact(j)) {
                return Err(Error::Profile(format!("period {j} does not divide count {count}")));
            }
            sum += &count;
            if map.insert(j, count).is_some() {
                return Err(Error::Profile(format!("period {j} repeated")));
            }
        }
        if sum != total {
            return Err(Error::Profile(format!("counts sum to {sum}, expected total {total}")));
        }
        Ok(PeriodProfile { total, entries: map })
    }

    /// Profile of a permutation of cycle type `nu` acting on `[n]`:
    /// `|T(j)| = j · m_j(nu)`.
    pub fn from_cycle_type(nu: &Partition) -> Self {
        let entries = nu
            .multiplicities()
            .iter()
            .map(|&(j, c)| (u64::from(j), C::from_u64_exact(u64::from(j) * u64::from(c))));
        Self::new(C::from_u64_exact(nu.n().into()), entries).expect("cycle type profile is valid")
    }

    /// Profile with `cycles[j]` orbits of each length `j`.
    pub fn from_cycle_counts(cycles: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut total = 0u64;
        let entries: Vec<(u64, C)> = cycles
            .into_iter()
            .map(|(j, c)| {
                total += j * c;
                (j, C::from_u64_exact(j * c))
            })
            .collect();
        Self::new(C::from_u64_exact(total), entries)
    }

    /// `|X|`.
    pub fn total(&self) -> &C {
        &self.total
    }

    /// Nonzero `(j, |T(j)|)` entries by increasing period.
    pub fn entries(&self) -> impl Iterator<Item = (u64, &C)> + '_ {
        self.entries.iter().map(|(&j, c)| (j, c))
    }

    /// `|T(j)|`.
    pub fn count(&self, j: u64) -> C {
        self.entries.get(&j).cloned().unwrap_or_else(C::zero)
    }

    /// `|T(j)| / j`, the number of cycles of length `j`.
    pub fn cycles(&self, j: u64) -> C {
        self.count(j).divide_exact(&C::from_u64_exact(j))
    }

    /// Total number of cycles `Σ_j |T(j)|/j`.
    pub fn num_cycles(&self) -> C {
        self.entries
            .iter()
            .map(|(&j, c)| c.divide_exact(&C::from_u64_exact(j)))
            .sum()
    }

    fn cycle_counts_u64(&self) -> Result<Vec<(usize, u64)>> {
        self.entries
            .iter()
            .map(|(&j, c)| {
                let cycles = c.divide_exact(&C::from_u64_exact(j));
                let cycles = cycles
                    .to_u64()
                    .ok_or_else(|| Error::resource("cycles per period", u128::MAX, u64::MAX))?;
                Ok((j as usize, cycles))
            })
            .collect()
    }
}

/// Period profile of the two-sided action `σ ↦ g1 σ g2` on `S_n` for `g1`,
/// `g2` of cycle types `nu1`, `nu2`, by Möbius inversion:
///
/// `|T(j)| = Σ_{m | j} μ(j/m) · z_{nu1^m} · [nu1^m = nu2^m]`.
///
/// Panics if the result violates a profile invariant (a negative count, a
/// period not dividing its count, or a total other than `n!`).
pub fn profile_pair(nu1: &Partition, nu2: &Partition) -> PeriodProfile<ExactInt> {
    assert_eq!(nu1.n(), nu2.n(), "cycle types of different sizes");
    let n = nu1.n();
    let period_bound = num_integer::lcm(nu1.order_lcm(), nu2.order_lcm());
    let ds = divisors(period_bound);
    // all-period counts |T̃(m)| = z_{nu1^m}·[nu1^m = nu2^m], indexed like `ds`
    let fixed_by_power: Vec<BigInt> = ds
        .iter()
        .map(|&m| {
            let p1 = nu1.power(m);
            if p1 == nu2.power(m) {
                BigInt::from(p1.z_value::<ExactInt>())
            } else {
                BigInt::zero()
            }
        })
        .collect();
    let mut entries = Vec::new();
    for &j in &ds {
        let mut exact = BigInt::zero();
        for (idx, &m) in ds.iter().enumerate() {
            if j % m != 0 {
                continue;
            }
            match mobius(j / m) {
                1 => exact += &fixed_by_power[idx],
                -1 => exact -= &fixed_by_power[idx],
                _ => {}
            }
        }
        assert!(
            !exact.is_negative(),
            "negative exact-period count {exact} at j={j} for ({nu1}, {nu2})"
        );
        entries.push((j, exact.to_biguint().expect("nonnegative")));
    }
    let profile = PeriodProfile::new(factorial::<ExactInt>(n.into()), entries)
        .unwrap_or_else(|e| panic!("profile_pair({nu1}, {nu2}): {e}"));
    profile
}

/// Period profile of `σ ↦ g1 σ g2` obtained by materializing the map on all
/// `n!` elements of `S_n` and decomposing it into cycles.
pub fn profile_from_pair_action<C: Exact>(g1: &Perm, g2: &Perm) -> Result<PeriodProfile<C>> {
    let table = pair_action_table(g1, g2)?;
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for len in cycle_lengths(&table) {
        *hist.entry(len as u64).or_default() += len as u64;
    }
    PeriodProfile::new(
        C::from_u64_exact(table.len() as u64),
        hist.into_iter().map(|(j, c)| (j, C::from_u64_exact(c))),
    )
}

/// The permutation `rank(σ) ↦ rank(g1 ∘ σ ∘ g2)` of `[0, n!)`.
pub fn pair_action_table(g1: &Perm, g2: &Perm) -> Result<Vec<usize>> {
    assert_eq!(g1.len(), g2.len(), "permutations of different degree");
    let n = g1.len() as u32;
    if n > PAIR_ACTION_MAX_N {
        return Err(Error::resource("pair action degree n", n, PAIR_ACTION_MAX_N));
    }
    let total = factorial_u64(n)?;
    Ok((0..total)
        .map(|rank| {
            let sigma = Perm::unrank(PermutationRank::new(n, rank).expect("rank in range"));
            g1.compose(&sigma).compose(g2).rank().rank() as usize
        })
        .collect())
}

fn check_k<C: Exact>(profile: &PeriodProfile<C>, k: u64) -> Result<()> {
    if C::from_u64_exact(k) > profile.total {
        return Err(Error::Argument(format!("k = {k} exceeds set size {}", profile.total)));
    }
    Ok(())
}

/// Number of `k`-subsets fixed by an element with the given profile, as the
/// sum over `λ ⊢ k` of `∏_j binom(|T(j)|/j, m_j(λ))`.
///
/// Costs `p(k)` terms; refuses `k` above [`PARTITION_SUM_MAX_K`], where
/// [`fixed_count_genfun`] should be used instead.
pub fn fixed_count_partition_sum<C: Exact>(profile: &PeriodProfile<C>, k: u64) -> Result<C> {
    check_k(profile, k)?;
    if k > PARTITION_SUM_MAX_K {
        return Err(Error::resource("partition-sum k (use the generating-function evaluator)", k, PARTITION_SUM_MAX_K));
    }
    let mut total = C::zero();
    'lambda: for lambda in Partitions::new(k as u32) {
        let mut term = C::one();
        for &(j, mult) in lambda.multiplicities() {
            let choose = binomial(&profile.cycles(j.into()), mult.into());
            if choose.is_zero() {
                continue 'lambda;
            }
            term *= &choose;
        }
        total += &term;
    }
    Ok(total)
}

/// Coefficients `0..=k_max` of `∏_j (1 + x^j)^{|T(j)|/j}`: entry `k` is the
/// number of fixed `k`-subsets.
pub fn fixed_count_genfun<C: Exact>(profile: &PeriodProfile<C>, k_max: u64) -> Result<Vec<C>> {
    check_k(profile, k_max)?;
    let deg = k_max as usize;
    let mut acc = vec![C::one()];
    for (stride, cycles) in profile.cycle_counts_u64()? {
        let factor = binomial_factor::<C>(stride, cycles, deg);
        acc = mul_truncated(&acc, &factor, deg);
    }
    acc.resize(deg + 1, C::zero());
    Ok(acc)
}

/// Number of `k`-subsets of `[n]` fixed by a permutation of cycle type
/// `sigma_type`.
pub fn fixed_ksubsets_single<C: Exact>(sigma_type: &Partition, k: u64) -> Result<C> {
    let profile = PeriodProfile::<C>::from_cycle_type(sigma_type);
    let mut row = fixed_count_genfun(&profile, k)?;
    Ok(row.swap_remove(k as usize))
}
