//! Exact binomials and truncated polynomial arithmetic over [`Exact`]
//! coefficients. Polynomials are dense coefficient vectors, lowest degree
//! first.

use crate::scalar::Exact;

/// `binom(alpha, beta)`, zero when `alpha < beta`.
///
/// Uses the falling-factorial product with an exact division after every
/// step, so each intermediate is itself a binomial coefficient.
pub fn binomial<C: Exact>(alpha: &C, beta: u64) -> C {
    if *alpha < C::from_u64_exact(beta) {
        return C::zero();
    }
    let mut acc = C::one();
    let mut factor = alpha.clone();
    for i in 0..beta {
        acc *= &factor;
        acc = acc.divide_exact(&C::from_u64_exact(i + 1));
        factor -= &C::one();
    }
    acc
}

/// `binom(alpha, i)` for `i = 0..=min(alpha, len-1)`, by the ratio
/// recurrence.
pub fn binomial_row<C: Exact>(alpha: u64, len: usize) -> Vec<C> {
    let top = alpha.min(len.saturating_sub(1) as u64);
    let mut row = Vec::with_capacity(top as usize + 1);
    if len == 0 {
        return row;
    }
    let mut cur = C::one();
    row.push(cur.clone());
    for i in 1..=top {
        cur *= &C::from_u64_exact(alpha - i + 1);
        cur = cur.divide_exact(&C::from_u64_exact(i));
        row.push(cur.clone());
    }
    row
}

/// Schoolbook product `a · b` truncated to degree `max_deg`, skipping zero
/// coefficients of `a`.
pub fn mul_truncated<C: Exact>(a: &[C], b: &[C], max_deg: usize) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = (a.len() + b.len() - 1).min(max_deg + 1);
    let mut out = vec![C::zero(); len];
    let b_nz: Vec<(usize, &C)> = b.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for &(j, bj) in &b_nz {
            if i + j >= len {
                break;
            }
            out[i + j] += &ai.mul_ref(bj);
        }
    }
    out
}

/// `base^exp` truncated to degree `max_deg`, by binary exponentiation.
pub fn pow_truncated<C: Exact>(base: &[C], mut exp: u64, max_deg: usize) -> Vec<C> {
    let mut acc = vec![C::one()];
    let mut sq: Vec<C> = base.iter().take(max_deg + 1).cloned().collect();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_truncated(&acc, &sq, max_deg);
        }
        exp >>= 1;
        if exp > 0 {
            sq = mul_truncated(&sq, &sq, max_deg);
        }
    }
    acc
}

/// `(1 + x^stride)^exp` truncated to degree `max_deg`, written out directly
/// from its binomial coefficients.
pub fn binomial_factor<C: Exact>(stride: usize, exp: u64, max_deg: usize) -> Vec<C> {
    assert!(stride >= 1);
    let terms = max_deg / stride + 1;
    let row = binomial_row::<C>(exp, terms);
    let len = (row.len() - 1) * stride + 1;
    let mut out = vec![C::zero(); len];
    for (i, c) in row.into_iter().enumerate() {
        out[i * stride] = c;
    }
    out
}
