//! Permutations of `{0, …, n-1}` in one-line notation and the canonical
//! bijection `[0, n!) ↔ S_n` by lexicographic rank.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Largest `n` whose `n!` fits the `u64` rank.
pub const MAX_RANKED_N: u32 = 20;

/// A permutation in one-line notation: `i ↦ self[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

/// Lexicographic rank of a permutation of `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationRank {
    n: u32,
    rank: u64,
}

impl PermutationRank {
    pub fn new(n: u32, rank: u64) -> Result<Self> {
        let total = factorial_u64(n)?;
        if rank >= total {
            return Err(Error::Argument(format!("rank {rank} out of range for n={n}")));
        }
        Ok(PermutationRank { n, rank })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }
}

pub(crate) fn factorial_u64(n: u32) -> Result<u64> {
    if n > MAX_RANKED_N {
        return Err(Error::resource("ranked permutation size n", n, MAX_RANKED_N));
    }
    Ok((1..=u64::from(n)).product())
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Validates that `images` is a permutation of `0..len`.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Argument(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Perm(images))
    }

    /// A fixed representative of the conjugacy class `nu`: cycles over
    /// consecutive points, longest cycles first.
    pub fn from_cycle_type(nu: &Partition) -> Self {
        let mut images = Vec::with_capacity(nu.n() as usize);
        let mut start = 0usize;
        for len in nu.parts_desc() {
            let len = len as usize;
            for i in 0..len {
                images.push(start + (i + 1) % len);
            }
            start += len;
        }
        Perm(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn pow(&self, m: u64) -> Perm {
        let mut acc = Perm::identity(self.len());
        let mut sq = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Cycle lengths, in order of the smallest element of each cycle.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        cycle_lengths(&self.0)
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_multiplicities(self.cycle_lengths().into_iter().map(|l| (l as u32, 1)))
            .expect("cycle lengths are positive")
    }

    pub fn rank(&self) -> PermutationRank {
        let n = self.len();
        assert!(n as u32 <= MAX_RANKED_N, "permutation too large to rank");
        let mut rank = 0u64;
        for i in 0..n {
            let smaller_after = self.0[i + 1..].iter().filter(|&&v| v < self.0[i]).count() as u64;
            rank = rank * (n - i) as u64 + smaller_after;
        }
        PermutationRank { n: n as u32, rank }
    }

    pub fn unrank(r: PermutationRank) -> Perm {
        let n = r.n as usize;
        let mut digits = vec![0usize; n];
        let mut rank = r.rank;
        for i in (0..n).rev() {
            let base = (n - i) as u64;
            digits[i] = (rank % base) as usize;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        Perm(digits.into_iter().map(|d| pool.remove(d)).collect())
    }
}

/// Cycle lengths of a permutation given as an image table.
pub fn cycle_lengths(images: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i];
            len += 1;
        }
        out.push(len);
    }
    out
}

/// Every permutation of `[n]` in rank order.
pub fn all_permutations(n: u32) -> Result<Vec<Perm>> {
    let total = factorial_u64(n)?;
    Ok((0..total).map(|rank| Perm::unrank(PermutationRank { n, rank })).collect())
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
