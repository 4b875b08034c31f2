//! Exhaustive checks of the centralizer-order bound under prime powers and
//! of the resulting bounds on pair period counts.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fixed_counts::profile_pair;
use crate::orbit_count::class_pairs;
use crate::partitions::{is_prime, Partitions};
use crate::report::CheckReport;
use crate::scalar::{factorial, pow};
use crate::ExactInt;

pub const PROP31_MAX_N: u32 = 14;
pub const PROP31_MAX_P: u64 = 13;
pub const LEMMA32_MAX_N: u32 = 6;

fn ln(x: &ExactInt) -> f64 {
    // ln of a big integer via its top 64 bits
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().expect("u64 to f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// For every `ν ⊢ n ≤ n_max` and prime `p ≤ p_max`, checks
/// `z_{ν^p} ≤ n!·p^{(1−n)/p}·z_ν` in the cleared form
/// `z_{ν^p}^p · p^{n−1} ≤ (n!)^p · z_ν^p`.
///
/// The reported ratio is `z_{ν^p} / (n!·p^{(1−n)/p}·z_ν)`.
pub fn check_prop31(n_max: u32, p_max: u64) -> Result<CheckReport> {
    if n_max > PROP31_MAX_N {
        return Err(Error::resource("centralizer bound n", n_max, PROP31_MAX_N));
    }
    if p_max > PROP31_MAX_P {
        return Err(Error::resource("centralizer bound prime", p_max, PROP31_MAX_P));
    }
    let mut report = CheckReport::new("prop31");
    let primes: Vec<u64> = (2..=p_max).filter(|&p| is_prime(p)).collect();
    for n in 1..=n_max {
        let order = factorial::<ExactInt>(n.into());
        for nu in Partitions::new(n) {
            let z = nu.z_value::<ExactInt>();
            for &p in &primes {
                let zp = nu.power(p).z_value::<ExactInt>();
                let lhs = pow(&zp, p) * pow(&ExactInt::from(p), u64::from(n) - 1);
                let rhs = pow(&(&order * &z), p);
                let pass = lhs <= rhs;
                let log_ratio = ln(&zp) - ln(&order) - ln(&z) + (f64::from(n) - 1.0) / p as f64 * (p as f64).ln();
                report.observe_ratio(log_ratio.exp(), || format!("n={n} nu={nu} p={p}"));
                report.push(format!("n={n} nu={nu} p={p}"), lhs, rhs, pass);
            }
        }
    }
    Ok(report)
}

/// For every ordered pair of cycle types of `S_n` and every period `j` in
/// the pair's profile, checks
///
/// * `|T(1)| = z_{ν1}·[ν1 = ν2]` (also when `j = 1` is absent),
/// * `|T(j)| ≤ n!`,
/// * for prime `j`: `|T(j)|^{2j} · j^{2(n−1)} ≤ (n!²·z_{ν1}·z_{ν2})^j`.
pub fn check_lemma32(n: u32) -> Result<CheckReport> {
    if n > LEMMA32_MAX_N {
        return Err(Error::resource("pair bound n", n, LEMMA32_MAX_N));
    }
    let mut report = CheckReport::new("lemma32");
    let order = factorial::<ExactInt>(n.into());
    for (nu1, nu2) in class_pairs(n) {
        let profile = profile_pair(&nu1, &nu2);
        let z1 = nu1.z_value::<ExactInt>();
        let z2 = nu2.z_value::<ExactInt>();

        let expected_fixed = if nu1 == nu2 { z1.clone() } else { ExactInt::zero() };
        let fixed = profile.count(1);
        report.push(
            format!("n={n} nu1={nu1} nu2={nu2} j=1 identity"),
            &fixed,
            &expected_fixed,
            fixed == expected_fixed,
        );

        for (j, count) in profile.entries() {
            report.push(
                format!("n={n} nu1={nu1} nu2={nu2} j={j} trivial"),
                count,
                &order,
                *count <= order,
            );
            if is_prime(j) {
                let lhs = pow(count, 2 * j) * pow(&ExactInt::from(j), 2 * (u64::from(n) - 1));
                let rhs = pow(&(&order * &order * &z1 * &z2), j);
                let log_ratio = ln(count) + (f64::from(n) - 1.0) / j as f64 * (j as f64).ln()
                    - ln(&order)
                    - 0.5 * (ln(&z1) + ln(&z2));
                report.observe_ratio(log_ratio.exp(), || format!("n={n} nu1={nu1} nu2={nu2} j={j}"));
                report.push(format!("n={n} nu1={nu1} nu2={nu2} j={j} prime"), lhs.clone(), rhs.clone(), lhs <= rhs);
            }
        }
    }
    Ok(report)
}
