//! Exact orbit counting for `k`-subsets of the symmetric group `S_n` under
//! two-sided multiplication `(g1, g2) · x = {g1 x_i g2}`.
//!
//! `T(n, k)` is computed by Burnside's lemma aggregated over pairs of
//! conjugacy classes, with the exact-period counts of each pair obtained by
//! Möbius inversion over powers of cycle types. Independent brute-force
//! oracles live in [`oracle`]; numerical checks of the asymptotic behaviour
//! of `T(n, k)` live in [`asymptotics`].
//!
//! Counting code is generic over an exact integer [`scalar::Exact`]; the
//! aliases below fix the production types.

pub mod asymptotics;
pub mod cache;
pub mod error;
pub mod fixed_counts;
pub mod orbit_count;
pub mod oracle;
pub mod partitions;
pub mod perm;
pub mod poly;
pub mod report;
pub mod scalar;

/// Arbitrary-precision nonnegative integer used for every census quantity.
pub type ExactInt = num_bigint::BigUint;

/// Signed counterpart of [`ExactInt`].
pub type SignedInt = num_bigint::BigInt;

/// Machine-width exact integer for small oracles and tests.
pub type SmallInt = u128;

pub use asymptotics::ratio::ExactRatio;
pub use error::{Error, Result};
pub use fixed_counts::PeriodProfile;
pub use orbit_count::{t_row, t_value, RowCache};
pub use partitions::Partition;
pub use perm::{Perm, PermutationRank};
