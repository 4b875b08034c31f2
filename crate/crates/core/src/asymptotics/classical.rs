//! Classical binomial estimates, each verified exactly over a finite sweep.

use crate::poly::binomial;
use crate::report::CheckReport;
use crate::scalar::{factorial, pow};
use crate::ExactInt;

/// Rational upper bound for π (exceeds π by about 2.7e-7). Using it on the
/// side where π multiplies can only make a check stricter.
const PI_UPPER: (u64, u64) = (355, 113);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalLimits {
    /// `n` bound for `(n/k)^k ≤ binom(n,k) ≤ n^k/k!`.
    pub estimate_n: u64,
    /// `n` and `k` bounds for `binom(n,m)^k ≤ binom(kn,km)`.
    pub power_n: u64,
    pub power_k: u64,
    /// Number of factors and per-factor size for Chu–Vandermonde.
    pub vandermonde_p: usize,
    pub vandermonde_n: u64,
    /// `n` bound for the central binomial bounds.
    pub central_n: u64,
    /// `n` bound for log-concavity of `k ↦ binom(n,k)`.
    pub log_concave_n: u64,
}

impl Default for ClassicalLimits {
    fn default() -> Self {
        ClassicalLimits {
            estimate_n: 60,
            power_n: 20,
            power_k: 5,
            vandermonde_p: 3,
            vandermonde_n: 8,
            central_n: 60,
            log_concave_n: 60,
        }
    }
}

fn b(n: u64, k: u64) -> ExactInt {
    binomial(&ExactInt::from(n), k)
}

fn int(v: u64) -> ExactInt {
    ExactInt::from(v)
}

/// Runs all five sweeps, one report each.
pub fn check_classical(limits: &ClassicalLimits) -> Vec<CheckReport> {
    vec![
        binomial_estimates(limits.estimate_n),
        binomial_power(limits.power_n, limits.power_k),
        chu_vandermonde(limits.vandermonde_p, limits.vandermonde_n),
        central_binomial(limits.central_n),
        log_concavity(limits.log_concave_n),
    ]
}

/// `n^k ≤ k^k·binom(n,k)` and `binom(n,k)·k! ≤ n^k` for `1 ≤ k ≤ n`.
pub fn binomial_estimates(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("binomial_estimates");
    for n in 1..=n_max {
        for k in 1..=n {
            let nk = pow(&int(n), k);
            let c = b(n, k);
            let lower = &c * pow(&int(k), k);
            report.push(format!("n={n} k={k} lower"), &nk, &lower, nk <= lower);
            let upper = &c * factorial::<ExactInt>(k);
            report.push(format!("n={n} k={k} upper"), &upper, &nk, upper <= nk);
        }
    }
    report
}

/// `binom(n,m)^k ≤ binom(kn,km)`.
pub fn binomial_power(n_max: u64, k_max: u64) -> CheckReport {
    let mut report = CheckReport::new("binomial_power");
    for n in 0..=n_max {
        for m in 0..=n {
            for k in 1..=k_max {
                let lhs = pow(&b(n, m), k);
                let rhs = b(k * n, k * m);
                let pass = lhs <= rhs;
                report.push(format!("n={n} m={m} k={k}"), lhs, rhs, pass);
            }
        }
    }
    report
}

/// `Σ_{k_1+…+k_p=m} ∏ binom(n_i,k_i) = binom(Σ n_i, m)` for every tuple
/// `(n_1,…,n_p)` with `p ≤ p_max`, `n_i ≤ n_max`, summing over explicit
/// compositions of `m`.
pub fn chu_vandermonde(p_max: usize, n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("chu_vandermonde");
    for p in 1..=p_max {
        let mut ns = vec![0u64; p];
        loop {
            let total: u64 = ns.iter().sum();
            for m in 0..=total {
                let lhs = composition_sum(&ns, m);
                let rhs = b(total, m);
                let pass = lhs == rhs;
                report.push(format!("n={ns:?} m={m}"), lhs, rhs, pass);
            }
            // odometer over [0, n_max]^p
            let Some(i) = ns.iter().position(|&x| x < n_max) else { break };
            ns[i] += 1;
            ns[..i].iter_mut().for_each(|x| *x = 0);
        }
    }
    report
}

fn composition_sum(ns: &[u64], m: u64) -> ExactInt {
    match ns {
        [] => int(u64::from(m == 0)),
        [first, rest @ ..] => (0..=m.min(*first))
            .map(|k| b(*first, k) * composition_sum(rest, m - k))
            .sum(),
    }
}

/// `2^{2n}/(2√n) ≤ binom(2n,n) ≤ 2^{2n}/√(πn)`, squared:
/// `2^{4n} ≤ 4n·binom²` and `π·n·binom² ≤ 2^{4n}` (with π bounded above
/// by 355/113).
pub fn central_binomial(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("central_binomial");
    let (pi_num, pi_den) = PI_UPPER;
    for n in 1..=n_max {
        let c = b(2 * n, n);
        let sq = &c * &c;
        let four_n = ExactInt::from(1u32) << (4 * n);
        let lower = &sq * (4 * n);
        report.push(format!("n={n} lower"), &four_n, &lower, four_n <= lower);
        let upper = &sq * (pi_num * n);
        let rhs = &four_n * pi_den;
        report.push(format!("n={n} upper"), &upper, &rhs, upper <= rhs);
    }
    report
}

/// `binom(n,k)² ≥ binom(n,k−1)·binom(n,k+1)` for `1 ≤ k ≤ n−1`.
pub fn log_concavity(n_max: u64) -> CheckReport {
    let mut report = CheckReport::new("log_concavity");
    for n in 2..=n_max {
        for k in 1..n {
            let c = b(n, k);
            let lhs = &c * &c;
            let rhs = b(n, k - 1) * b(n, k + 1);
            let pass = lhs >= rhs;
            report.push(format!("n={n} k={k}"), lhs, rhs, pass);
        }
    }
    report
}
