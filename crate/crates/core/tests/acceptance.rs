//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p orbits-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbits::asymptotics::bounds::{check_lemma32, check_prop31};
use orbits::asymptotics::classical::{check_classical, ClassicalLimits};
use orbits::asymptotics::problem5::problem5_max_ratio;
use orbits::asymptotics::{b_n_x, b_n_x_series, default_x_grid, max_n2_r, sup_error, x_n_check};
use orbits::fixed_counts::{fixed_count_genfun, fixed_count_partition_sum, fixed_ksubsets_single};
use orbits::orbit_count::{burnside_sums, RowOptions};
use orbits::oracle::{orbit_enumeration, t_row_oracle};
use orbits::partitions::{partition_count, Partitions};
use orbits::scalar::factorial;
use orbits::{t_row, ExactInt, ExactRatio, PeriodProfile, Perm, RowCache};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn(&mut Rows) -> Outcome,
}

/// Rows for n = 1..=6, computed once and shared between criteria.
#[derive(Default)]
struct Rows(Vec<Option<RowCache>>);

impl Rows {
    fn get(&mut self, n: u32) -> &RowCache {
        let idx = n as usize;
        if self.0.len() <= idx {
            self.0.resize(idx + 1, None);
        }
        self.0[idx].get_or_insert_with(|| t_row(n).expect("row computes"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn as_u64(row: &[ExactInt]) -> Vec<u64> {
    row.iter().map(|v| v.to_u64().expect("small value")).collect()
}

const TABLE_N3: [u64; 7] = [1, 1, 2, 2, 2, 1, 1];
const TABLE_N4_HALF: [u64; 13] = [1, 1, 4, 10, 41, 103, 309, 691, 1458, 2448, 3703, 4587, 5050];

fn c1_table(rows: &mut Rows) -> Outcome {
    let r3 = as_u64(&rows.get(3).row);
    ensure(r3 == TABLE_N3, || format!("T(3,.) = {r3:?}"))?;
    let mut full4: Vec<u64> = TABLE_N4_HALF.to_vec();
    full4.extend(TABLE_N4_HALF[..12].iter().rev());
    let r4 = as_u64(&rows.get(4).row);
    ensure(r4 == full4, || format!("T(4,.) = {r4:?}"))?;
    Ok("T(3,.) and T(4,.) match exactly".into())
}

fn c2_oracle(rows: &mut Rows) -> Outcome {
    for n in 2..=4 {
        let oracle = t_row_oracle(n).map_err(|e| e.to_string())?;
        ensure(oracle == rows.get(n).row, || format!("oracle row differs at n={n}"))?;
    }
    for k in 0..=6 {
        let e = orbit_enumeration(3, k).map_err(|e| e.to_string())?;
        ensure(e == rows.get(3).row[k as usize], || format!("enumeration n=3 k={k} gave {e}"))?;
    }
    let e4: Vec<u64> = (0..=3).map(|k| orbit_enumeration(4, k).unwrap().to_u64().unwrap()).collect();
    ensure(e4 == [1, 1, 4, 10], || format!("enumeration n=4 k<=3 gave {e4:?}"))?;
    ensure(e4[..] == as_u64(&rows.get(4).row[..4])[..], || "enumeration disagrees with row".into())?;
    Ok("Burnside oracle n=2..4 and orbit enumeration agree".into())
}

fn c3_structure(rows: &mut Rows) -> Outcome {
    for n in 1..=6u32 {
        let row = rows.get(n).row.clone();
        let order = row.len() - 1;
        let one = ExactInt::from(1u32);
        ensure(row[0] == one && row[1] == one, || format!("n={n}: T(n,0), T(n,1) != 1"))?;
        if n >= 2 {
            let p = ExactInt::from(partition_count(n) - 1);
            ensure(row[2] == p, || format!("n={n}: T(n,2) = {} != p(n)-1 = {p}", row[2]))?;
        }
        for k in 0..=order {
            ensure(row[k] == row[order - k], || format!("n={n}: asymmetric at k={k}"))?;
        }
        let sums = burnside_sums(n, &RowOptions::default()).map_err(|e| e.to_string())?;
        let f = factorial::<ExactInt>(n.into());
        let group = &f * &f;
        for (k, s) in sums.iter().enumerate() {
            ensure((s % &group).is_zero(), || format!("n={n}: Burnside sum not divisible at k={k}"))?;
            ensure(s / &group == row[k], || format!("n={n}: quotient differs at k={k}"))?;
        }
    }
    Ok("identities hold for n=1..6".into())
}

fn random_profile(rng: &mut ChaCha8Rng) -> PeriodProfile<ExactInt> {
    let target = rng.gen_range(1..=60u64);
    let mut cycles: Vec<(u64, u64)> = Vec::new();
    let mut total = 0;
    while total < target {
        let j = rng.gen_range(1..=(target - total).min(20));
        let max_c = (target - total) / j;
        let c = rng.gen_range(1..=max_c.min(6));
        match cycles.iter_mut().find(|(p, _)| *p == j) {
            Some(e) => e.1 += c,
            None => cycles.push((j, c)),
        }
        total += j * c;
    }
    PeriodProfile::from_cycle_counts(cycles).expect("valid profile")
}

fn c4_evaluators(_: &mut Rows) -> Outcome {
    let mut checked = 0u64;
    for total in 0..=12u32 {
        for nu in Partitions::new(total) {
            let profile = PeriodProfile::<ExactInt>::from_cycle_type(&nu);
            let row = fixed_count_genfun(&profile, total.into()).map_err(|e| e.to_string())?;
            for (k, v) in row.iter().enumerate() {
                let ps = fixed_count_partition_sum(&profile, k as u64).map_err(|e| e.to_string())?;
                ensure(*v == ps, || format!("profile {nu} k={k}: genfun {v} != partition sum {ps}"))?;
                checked += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2_718_281_828);
    for i in 0..1000 {
        let profile = random_profile(&mut rng);
        let total = profile.total().to_u64().unwrap();
        ensure(total <= 60, || "profile too large".into())?;
        let k_max = total.min(20);
        let row = fixed_count_genfun(&profile, k_max).map_err(|e| e.to_string())?;
        for k in 0..=k_max {
            let ps = fixed_count_partition_sum(&profile, k).map_err(|e| e.to_string())?;
            ensure(row[k as usize] == ps, || format!("random profile #{i} {profile:?} k={k}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (profile, k) instances agree"))
}

fn c5_single_sided(_: &mut Rows) -> Outcome {
    let mut checked = 0;
    for n in 0..=7u32 {
        for nu in Partitions::new(n) {
            let sigma = Perm::from_cycle_type(&nu);
            let images = sigma.images();
            let mut brute = vec![0u64; n as usize + 1];
            for mask in 0u32..(1 << n) {
                let image = (0..n as usize)
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u32, |acc, i| acc | 1 << images[i]);
                if image == mask {
                    brute[mask.count_ones() as usize] += 1;
                }
            }
            for k in 0..=u64::from(n) {
                let f: ExactInt = fixed_ksubsets_single(&nu, k).map_err(|e| e.to_string())?;
                ensure(f == ExactInt::from(brute[k as usize]), || format!("{nu} k={k}: {f} vs {}", brute[k as usize]))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (cycle type, k) instances agree"))
}

fn c6_prop31(_: &mut Rows) -> Outcome {
    let report = check_prop31(12, 13).map_err(|e| e.to_string())?;
    if let Some(f) = report.first_failure() {
        return Err(format!("violated at {}", f.params));
    }
    Ok(format!(
        "{} instances; max ratio {:.6} at {}",
        report.checked(),
        report.max_ratio.unwrap_or(0.0),
        report.max_ratio_at.clone().unwrap_or_default()
    ))
}

fn c7_lemma32(_: &mut Rows) -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        let report = check_lemma32(n).map_err(|e| e.to_string())?;
        if let Some(f) = report.first_failure() {
            return Err(format!("violated at {}", f.params));
        }
        checked += report.checked();
    }
    Ok(format!("{checked} instances for n=1..6"))
}

fn c8_xn(_: &mut Rows) -> Outcome {
    let table = x_n_check(30).map_err(|e| e.to_string())?;
    let drift: Vec<String> = table[9..].iter().step_by(5).map(|r| format!("n={}:{:.4}", r.n, r.ratio)).collect();
    let last = table.last().unwrap();
    ensure((0.8..=1.2).contains(&last.ratio), || format!("ratio at n=30 is {}", last.ratio))?;
    Ok(format!("ratio {:.6} at n=30; drift {}", last.ratio, drift.join(" ")))
}

fn c9_scaling(rows: &mut Rows) -> Outcome {
    let grid = default_x_grid();
    let mut sups = Vec::new();
    for n in 4..=6 {
        let series = b_n_x_series(rows.get(n), &grid).map_err(|e| e.to_string())?;
        sups.push(sup_error(&series));
    }
    ensure(sups[0] > sups[1] && sups[1] > sups[2], || format!("sup errors {sups:?} not strictly decreasing"))?;
    let b0 = b_n_x(rows.get(6), 0.0).map_err(|e| e.to_string())?;
    ensure((0.9..=1.1).contains(&b0), || format!("B_6(0) = {b0}"))?;
    Ok(format!("sup|B_n - gauss| = {:.4} > {:.4} > {:.4}; B_6(0) = {b0:.6}", sups[0], sups[1], sups[2]))
}

fn c10_decay(rows: &mut Rows) -> Outcome {
    let bound = ExactRatio::integer(BigInt::from(50));
    let mut maxima = Vec::new();
    for n in 4..=6 {
        let best = max_n2_r(rows.get(n)).ok_or("empty R domain")?;
        ensure(best.n2_r <= bound, || format!("n={n}: max n^2 R = {} > 50", best.n2_r.to_f64()))?;
        maxima.push(best);
    }
    ensure(maxima[2].n2_r <= maxima[1].n2_r, || "max n^2 R increases from n=5 to n=6".into())?;
    Ok(format!(
        "max n^2 R(n,k): n=4 {:.4} (k={}), n=5 {:.4} (k={}), n=6 {:.4} (k={})",
        maxima[0].n2_r.to_f64(),
        maxima[0].k,
        maxima[1].n2_r.to_f64(),
        maxima[1].k,
        maxima[2].n2_r.to_f64(),
        maxima[2].k
    ))
}

fn c11_classical(_: &mut Rows) -> Outcome {
    let reports = check_classical(&ClassicalLimits::default());
    let mut parts = Vec::new();
    for r in &reports {
        if let Some(f) = r.first_failure() {
            return Err(format!("{} violated at {}", r.name, f.params));
        }
        parts.push(format!("{} {}", r.name, r.checked()));
    }
    Ok(parts.join(", "))
}

fn c12_problem5(_: &mut Rows) -> Outcome {
    let mut checked = 0;
    for m in [2u64, 3] {
        for n in 1..=20 {
            let r = problem5_max_ratio(n, m).map_err(|e| e.to_string())?;
            ensure(r.agree, || {
                format!(
                    "n={n} m={m}: brute max {} at {} but closed form {} (t={})",
                    r.ratio, r.maximizer, r.closed_form, r.t
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, m) pairs agree"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "exact small rows", budget: Duration::from_secs(1), run: c1_table },
        Criterion { id: 2, title: "oracle equivalence", budget: Duration::from_secs(120), run: c2_oracle },
        Criterion { id: 3, title: "structural identities n<=6", budget: Duration::from_secs(600), run: c3_structure },
        Criterion { id: 4, title: "evaluator equivalence", budget: Duration::from_secs(60), run: c4_evaluators },
        Criterion { id: 5, title: "single-sided fixed subsets", budget: Duration::from_secs(60), run: c5_single_sided },
        Criterion { id: 6, title: "centralizer prime-power bound", budget: Duration::from_secs(60), run: c6_prop31 },
        Criterion { id: 7, title: "pair period-count bounds", budget: Duration::from_secs(60), run: c7_lemma32 },
        Criterion { id: 8, title: "X_n asymptotic", budget: Duration::from_secs(10), run: c8_xn },
        Criterion { id: 9, title: "scaling limit B_n(x)", budget: Duration::from_secs(600), run: c9_scaling },
        Criterion { id: 10, title: "decay of n^2 R(n,k)", budget: Duration::from_secs(600), run: c10_decay },
        Criterion { id: 11, title: "classical inequalities", budget: Duration::from_secs(30), run: c11_classical },
        Criterion { id: 12, title: "power-ratio closed form", budget: Duration::from_secs(30), run: c12_problem5 },
    ];
    let mut rows = Rows::default();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)(&mut rows);
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over time budget {:?}", c.budget)),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} [{}] {} ({:.2}s): {detail}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
