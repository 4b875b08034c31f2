//! Integer partitions stored as sparse multiplicity lists, doubling as cycle
//! types of permutations, together with the arithmetic the census needs:
//! centralizer orders `z_ν`, class sizes, the power map `ν ↦ ν^m`, the
//! Möbius function and divisor helpers.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::scalar::{factorial, pow, Exact};

/// Default upper bound on `n` for [`enumerate_partitions`] (`p(64) ≈ 1.7e6`).
pub const DEFAULT_PARTITION_LIMIT: u32 = 64;

/// An integer partition of `n`, stored as `(part, multiplicity)` pairs with
/// strictly increasing parts and nonzero multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: u32,
    mults: Vec<(u32, u32)>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { n: 0, mults: Vec::new() }
    }

    /// `(1^n)`, the cycle type of the identity.
    pub fn identity(n: u32) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Partition { n, mults: vec![(1, n)] }
    }

    /// `(n)`, the cycle type of a full cycle.
    pub fn full_cycle(n: u32) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Partition { n, mults: vec![(n, 1)] }
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        Self::from_multiplicities(parts.iter().map(|&p| (p, 1)))
    }

    /// Builds a partition from `(part, multiplicity)` pairs in any order;
    /// repeated parts are merged and zero multiplicities dropped.
    pub fn from_multiplicities(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut mults: Vec<(u32, u32)> = Vec::new();
        for (part, mult) in pairs {
            if part == 0 {
                return Err(Error::Argument("partition parts must be positive".into()));
            }
            if mult == 0 {
                continue;
            }
            match mults.binary_search_by_key(&part, |&(p, _)| p) {
                Ok(i) => mults[i].1 += mult,
                Err(i) => mults.insert(i, (part, mult)),
            }
        }
        let n = mults.iter().map(|&(p, m)| u64::from(p) * u64::from(m)).sum::<u64>();
        let n = u32::try_from(n).map_err(|_| Error::Argument("partition too large".into()))?;
        Ok(Partition { n, mults })
    }

    /// The partitioned integer.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `(part, multiplicity)` pairs, parts ascending.
    pub fn multiplicities(&self) -> &[(u32, u32)] {
        &self.mults
    }

    /// `m_j(ν)`, the number of parts equal to `j`.
    pub fn multiplicity(&self, j: u32) -> u32 {
        self.mults
            .binary_search_by_key(&j, |&(p, _)| p)
            .map(|i| self.mults[i].1)
            .unwrap_or(0)
    }

    /// Parts in descending order, repeated by multiplicity.
    pub fn parts_desc(&self) -> Vec<u32> {
        self.mults
            .iter()
            .rev()
            .flat_map(|&(p, m)| std::iter::repeat_n(p, m as usize))
            .collect()
    }

    pub fn num_parts(&self) -> u32 {
        self.mults.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.mults.iter().all(|&(p, _)| p == 1)
    }

    /// `z_ν = ∏_j j^{m_j} m_j!`, the centralizer order of a permutation of
    /// cycle type `ν`.
    pub fn z_value<C: Exact>(&self) -> C {
        let mut acc = C::one();
        for &(part, mult) in &self.mults {
            acc *= &pow(&C::from_u64_exact(part.into()), mult.into());
            acc *= &factorial::<C>(mult.into());
        }
        acc
    }

    /// `n! / z_ν`, the number of permutations with this cycle type.
    pub fn class_size<C: Exact>(&self) -> C {
        factorial::<C>(self.n.into()).divide_exact(&self.z_value())
    }

    /// `ν^m`: a cycle of length `ℓ` in `g` splits into `gcd(ℓ, m)` cycles of
    /// length `ℓ / gcd(ℓ, m)` in `g^m`.
    pub fn power(&self, m: u64) -> Partition {
        assert!(m >= 1, "power exponent must be positive");
        let split = self.mults.iter().map(|&(part, mult)| {
            let g = u64::from(part).gcd(&m) as u32;
            (part / g, g * mult)
        });
        Partition::from_multiplicities(split).expect("power of a valid partition")
    }

    /// Order of any permutation with this cycle type: the lcm of the parts.
    pub fn order_lcm(&self) -> u64 {
        self.mults.iter().fold(1u64, |acc, &(p, _)| acc.lcm(&u64::from(p)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts_desc().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Lazy iterator over the partitions of `n` in reverse-lexicographic order
/// of their descending part lists: `(n), (n-1,1), …, (1^n)`.
#[derive(Clone, Debug)]
pub struct Partitions {
    parts: Vec<u32>,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        Partitions {
            parts: if n == 0 { Vec::new() } else { vec![n] },
            done: false,
        }
    }

    fn advance(&mut self) {
        let Some(i) = self.parts.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return;
        };
        let ones = (self.parts.len() - i - 1) as u32;
        self.parts[i] -= 1;
        let cap = self.parts[i];
        self.parts.truncate(i + 1);
        let mut rem = ones + 1;
        while rem > 0 {
            let p = cap.min(rem);
            self.parts.push(p);
            rem -= p;
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_parts(&self.parts).expect("generated parts are positive");
        self.advance();
        Some(out)
    }
}

/// All partitions of `n` in reverse-lexicographic order, refusing `n` above
/// [`DEFAULT_PARTITION_LIMIT`].
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    enumerate_partitions_with_limit(n, DEFAULT_PARTITION_LIMIT)
}

pub fn enumerate_partitions_with_limit(n: u32, limit: u32) -> Result<Vec<Partition>> {
    if n > limit {
        return Err(Error::resource("partition size n", n, limit));
    }
    Ok(Partitions::new(n).collect())
}

/// Number of partitions `p(n)` by Euler's recurrence (independent of the
/// enumerator).
pub fn partition_count(n: u32) -> u128 {
    let n = n as usize;
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut acc: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[i - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                acc += sign * p[i - g2] as i128;
            }
        }
        p[i] = acc as u128;
    }
    p[n]
}

/// Möbius function `μ(d)` by trial division.
pub fn mobius(d: u64) -> i8 {
    assert!(d >= 1, "mobius is defined for positive integers");
    let mut d = d;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p) {
            d /= p;
            if d.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if d > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn part(parts: &[u32]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::empty()]);
        let four: Vec<Vec<u32>> = enumerate_partitions(4).unwrap().iter().map(|p| p.parts_desc()).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(enumerate_partitions(5).unwrap().len(), 7);
        for n in 0..=30 {
            assert_eq!(Partitions::new(n).count() as u128, partition_count(n), "n={n}");
        }
        assert_eq!(partition_count(64), 1_741_630);
    }

    #[test]
    fn enumeration_limit() {
        assert!(matches!(enumerate_partitions(65), Err(Error::Resource { .. })));
        assert!(enumerate_partitions_with_limit(10, 9).is_err());
    }

    #[test]
    fn storage_invariants() {
        let p = part(&[3, 1, 3, 2]);
        assert_eq!(p.multiplicities(), &[(1, 1), (2, 1), (3, 2)]);
        assert_eq!(p.n(), 9);
        assert_eq!(p.to_string(), "(3,3,2,1)");
        assert!(Partition::from_parts(&[2, 0]).is_err());
        assert_eq!(Partition::from_parts(&[]).unwrap(), Partition::empty());
    }

    #[test]
    fn z_values() {
        assert_eq!(Partition::identity(6).z_value::<u64>(), 720);
        assert_eq!(part(&[2, 1]).z_value::<u64>(), 2);
        assert_eq!(Partition::full_cycle(7).z_value::<u64>(), 7);
        assert_eq!(Partition::empty().z_value::<u64>(), 1);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        assert_eq!(Partition::identity(3).class_size::<u64>(), 1);
        assert_eq!(part(&[2, 1]).class_size::<u64>(), 3);
        for n in 0..=12 {
            let total: BigUint = Partitions::new(n).map(|p| p.class_size::<BigUint>()).sum();
            assert_eq!(total, factorial::<BigUint>(n.into()));
        }
    }

    #[test]
    fn power_examples() {
        let six = Partition::full_cycle(6);
        assert_eq!(six.power(1), six);
        assert_eq!(six.power(2), part(&[3, 3]));
        assert_eq!(six.power(3), part(&[2, 2, 2]));
        assert_eq!(six.power(6), Partition::identity(6));
    }

    #[test]
    fn power_is_multiplicative_and_grows_z() {
        for n in 0..=8 {
            for nu in Partitions::new(n) {
                for a in 1..=12u64 {
                    let na = nu.power(a);
                    assert_eq!(na.n(), n);
                    for b in 1..=12u64 {
                        assert_eq!(nu.power(a * b), na.power(b), "{nu} a={a} b={b}");
                    }
                }
            }
        }
        for n in 0..=10 {
            for nu in Partitions::new(n) {
                for m in 1..=12 {
                    assert!(nu.power(m).z_value::<u64>() >= nu.z_value::<u64>());
                }
            }
        }
    }

    #[test]
    fn order_lcm_is_minimal_trivializing_power() {
        assert_eq!(Partition::identity(5).order_lcm(), 1);
        assert_eq!(part(&[2, 3]).order_lcm(), 6);
        for n in 1..=10 {
            for nu in Partitions::new(n) {
                let l = nu.order_lcm();
                for m in 1..=2 * l {
                    assert_eq!(nu.power(m).is_identity(), m % l == 0, "{nu} m={m}");
                }
            }
        }
    }

    #[test]
    fn mobius_values_and_sum() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(1 << 31), 0);
        for j in 1..=10_000u64 {
            let s: i64 = divisors(j).into_iter().map(|d| i64::from(mobius(d))).sum();
            assert_eq!(s, i64::from(j == 1), "j={j}");
        }
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}
