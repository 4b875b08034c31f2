//! Brute-force ground truth for `T(n, k)` at tiny `n`.
//!
//! Nothing here uses cycle types, class sizes or Möbius inversion:
//! [`t_row_oracle`] applies Burnside's lemma literally over all `n!²` pairs,
//! and [`orbit_enumeration`] builds orbits straight from the action.

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fixed_counts::{fixed_count_genfun, profile_from_pair_action};
use crate::perm::{all_permutations, factorial_u64, Perm, PermutationRank};
use crate::poly::binomial;
use crate::scalar::Exact;
use crate::ExactInt;

/// Largest `n` for [`t_row_oracle`].
pub const ORACLE_ROW_MAX_N: u32 = 4;
/// Largest `n` for [`orbit_enumeration`].
pub const ENUMERATION_MAX_N: u32 = 4;
/// Largest number of `k`-subsets [`orbit_enumeration`] will visit.
pub const ENUMERATION_BUDGET: u64 = 10_000_000;

/// `T(n, 0..=n!)` by Burnside's lemma summed over every pair in `S_n²`.
pub fn t_row_oracle(n: u32) -> Result<Vec<ExactInt>> {
    if n > ORACLE_ROW_MAX_N {
        return Err(Error::resource("oracle row size n", n, ORACLE_ROW_MAX_N));
    }
    let perms = all_permutations(n)?;
    let order = perms.len() as u64;
    let len = order as usize + 1;
    let sums = perms
        .par_iter()
        .map(|g1| {
            let mut acc = vec![ExactInt::zero(); len];
            for g2 in &perms {
                let profile = profile_from_pair_action::<ExactInt>(g1, g2).expect("n within oracle range");
                let fixed = fixed_count_genfun(&profile, order).expect("k_max = n!");
                for (a, f) in acc.iter_mut().zip(fixed) {
                    *a += f;
                }
            }
            acc
        })
        .reduce(
            || vec![ExactInt::zero(); len],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let group = ExactInt::from(order * order);
    Ok(sums.into_iter().map(|s| s.divide_exact(&group)).collect())
}

/// One orbit found by [`orbit_census`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically smallest member, as sorted permutation ranks.
    pub representative: Vec<u64>,
    /// Number of distinct subsets in the orbit.
    pub size: u64,
}

/// Translation tables `rank(σ) ↦ rank(g1 σ g2)` for every pair.
fn translations(n: u32) -> Result<Vec<Vec<u8>>> {
    let perms = all_permutations(n)?;
    let mut tables = Vec::with_capacity(perms.len() * perms.len());
    for g1 in &perms {
        for g2 in &perms {
            tables.push(
                perms
                    .iter()
                    .map(|s| g1.compose(s).compose(g2).rank().rank() as u8)
                    .collect(),
            );
        }
    }
    Ok(tables)
}

fn image(mask: u64, table: &[u8]) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        out |= 1 << table[i];
        rest &= rest - 1;
    }
    out
}

/// Lexicographic order of equal-size sets given as bitmasks: the smaller set
/// owns the lowest element of the symmetric difference.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

/// Next bitmask with the same popcount (Gosper's hack).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

fn check_enumeration(n: u32, k: u64) -> Result<u64> {
    if n > ENUMERATION_MAX_N || n == 0 {
        return Err(Error::resource("orbit enumeration size n", n, ENUMERATION_MAX_N));
    }
    let order = factorial_u64(n)?;
    if k > order {
        return Err(Error::Argument(format!("k = {k} exceeds {n}! = {order}")));
    }
    let subsets = binomial(&ExactInt::from(order), k);
    if subsets > ExactInt::from(ENUMERATION_BUDGET) {
        return Err(Error::resource(
            "k-subsets to enumerate",
            subsets.to_u128().unwrap_or(u128::MAX),
            ENUMERATION_BUDGET,
        ));
    }
    Ok(order)
}

/// Every orbit of `k`-subsets of `S_n`, each found as the subsets that are
/// lexicographically minimal among all of their `n!²` translates.
pub fn orbit_census(n: u32, k: u64) -> Result<Vec<Orbit>> {
    let order = check_enumeration(n, k)?;
    let tables = translations(n)?;
    let mut orbits = Vec::new();
    if k == 0 {
        return Ok(vec![Orbit { representative: Vec::new(), size: 1 }]);
    }
    let last = ((1u64 << k) - 1) << (order - k);
    let mut mask = (1u64 << k) - 1;
    loop {
        let canonical = tables.iter().all(|t| !lex_less(image(mask, t), mask));
        if canonical {
            let mut images: Vec<u64> = tables.iter().map(|t| image(mask, t)).collect();
            images.sort_unstable();
            images.dedup();
            orbits.push(Orbit {
                representative: (0..order).filter(|i| mask >> i & 1 == 1).collect(),
                size: images.len() as u64,
            });
        }
        if mask == last {
            break;
        }
        mask = next_combination(mask);
    }
    Ok(orbits)
}

/// `T(n, k)` by counting canonical orbit representatives. Requires `n ≤ 4`
/// and `binom(n!, k) ≤ 10^7`.
pub fn orbit_enumeration(n: u32, k: u64) -> Result<ExactInt> {
    Ok(ExactInt::from(orbit_census(n, k)?.len()))
}

/// Representative permutations of an orbit.
pub fn representative_perms(n: u32, orbit: &Orbit) -> Vec<Perm> {
    orbit
        .representative
        .iter()
        .map(|&r| Perm::unrank(PermutationRank::new(n, r).expect("rank in range")))
        .collect()
}
