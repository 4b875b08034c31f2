use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orbits::asymptotics::bounds::{check_lemma32, check_prop31, LEMMA32_MAX_N, PROP31_MAX_N, PROP31_MAX_P};
use orbits::asymptotics::classical::{check_classical, ClassicalLimits};
use orbits::asymptotics::problem5::problem5_max_ratio;
use orbits::asymptotics::{b_n_x_series, r_nk_series, x_grid, x_n_check};
use orbits::cache::RowStore;
use orbits::orbit_count::{value_from_row, RowOptions};
use orbits::oracle::t_row_oracle;
use orbits::report::CheckReport;
use orbits::{Error, ExactInt, RowCache};

/// Orbits of k-subsets of S_n under left and right multiplication.
#[derive(Parser)]
#[command(name = "orbits", version)]
struct Cli {
    /// Worker threads (default: all available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print T(n,k).
    Value {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Print or write the full row T(n, 0..=n!).
    Row {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "bfile")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Run a verification suite and print a JSON summary.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Row size for `oracle`.
        #[arg(long, default_value_t = 4)]
        n: u32,
        /// Largest n for `bounds` and `problem5`.
        #[arg(long)]
        nmax: Option<u32>,
        /// Largest exponent for `bounds`, largest m for `problem5`.
        #[arg(long)]
        pmax: Option<u64>,
    },
    /// Emit asymptotic series as CSV or JSON.
    Asym {
        #[command(subcommand)]
        series: Series,
    },
}

#[derive(Args)]
struct Limits {
    /// Allow the largest supported row size.
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Series {
    /// B_n(x) against exp(-x^2/2).
    Bnx {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = -4.0, allow_negative_numbers = true)]
        xmin: f64,
        #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
        xmax: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// R(n,k) and n^2 R(n,k) over 3 <= k <= n!-3.
    Rnk {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// X_n and its normalized ratio.
    Xn {
        #[arg(long, default_value_t = 30)]
        nmax: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Table,
    Oracle,
    Bounds,
    Classical,
    Problem5,
}

enum Failure {
    Usage(String),
    Verify(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Lib(Error::Argument(_) | Error::Profile(_)) => 2,
            Failure::Lib(Error::Resource { .. }) => 3,
            Failure::Lib(Error::Cache { .. } | Error::Io(_)) | Failure::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Verify(m) => write!(f, "verification failed: {m}"),
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("usage: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("global thread pool is configured once");
    }
    let result = match cli.command {
        Command::Value { n, k, format, limits } => cmd_value(n, k, format, &limits),
        Command::Row { n, format, out, limits } => cmd_row(n, format, out, &limits),
        Command::Verify { target, n, nmax, pmax } => cmd_verify(target, n, nmax, pmax),
        Command::Asym { series } => cmd_asym(series),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("orbits: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load_row(n: u32, limits: &Limits) -> Result<RowCache, Failure> {
    let opts = RowOptions { force: limits.force };
    Ok(RowStore::from_env().get_or_compute(n, &opts)?)
}

fn cmd_value(n: u32, k: u64, format: Option<Format>, limits: &Limits) -> CmdResult {
    let row = load_row(n, limits)?;
    let value = value_from_row(&row, k)?;
    let mut out = io::stdout().lock();
    match format {
        None => writeln!(out, "{value}")?,
        Some(Format::Bfile) => writeln!(out, "{k} {value}")?,
        Some(Format::Csv) => writeln!(out, "n,k,value\n{n},{k},{value}")?,
        Some(Format::Json) => writeln!(out, "{}", json!({"n": n, "k": k, "value": value.to_string()}))?,
    }
    Ok(())
}

fn cmd_row(n: u32, format: Format, out: Option<PathBuf>, limits: &Limits) -> CmdResult {
    let row = load_row(n, limits)?;
    let sink: Box<dyn Write> = match &out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = BufWriter::new(sink);
    match format {
        Format::Bfile => {
            for (k, v) in row.row.iter().enumerate() {
                writeln!(w, "{k} {v}")?;
            }
        }
        Format::Csv => {
            writeln!(w, "k,value")?;
            for (k, v) in row.row.iter().enumerate() {
                writeln!(w, "{k},{v}")?;
            }
        }
        Format::Json => {
            let values: Vec<String> = row.row.iter().map(ExactInt::to_string).collect();
            writeln!(w, "{}", json!({"n": n, "row": values}))?;
        }
    }
    w.flush()?;
    Ok(())
}

const TABLE_N3: [u64; 7] = [1, 1, 2, 2, 2, 1, 1];
const TABLE_N4: [u64; 25] = [
    1, 1, 4, 10, 41, 103, 309, 691, 1458, 2448, 3703, 4587, 5050, 4587, 3703, 2448, 1458, 691, 309, 103, 41, 10, 4, 1, 1,
];

fn table_report() -> Result<CheckReport, Failure> {
    let mut report = CheckReport::new("table");
    for (n, expected) in [(3, &TABLE_N3[..]), (4, &TABLE_N4[..])] {
        let row = RowStore::from_env().get_or_compute(n, &RowOptions::default())?;
        for (k, (got, want)) in row.row.iter().zip(expected).enumerate() {
            report.push(format!("n={n} k={k}"), got, want, *got == ExactInt::from(*want));
        }
    }
    Ok(report)
}

fn oracle_report(n: u32) -> Result<CheckReport, Failure> {
    let mut report = CheckReport::new("oracle");
    let oracle = t_row_oracle(n)?;
    let row = RowStore::from_env().get_or_compute(n, &RowOptions::default())?;
    for (k, (got, want)) in row.row.iter().zip(&oracle).enumerate() {
        report.push(format!("n={n} k={k}"), got, want, got == want);
    }
    Ok(report)
}

fn cmd_verify(target: Target, n: u32, nmax: Option<u32>, pmax: Option<u64>) -> CmdResult {
    let (name, reports) = match target {
        Target::Table => ("table", vec![table_report()?]),
        Target::Oracle => ("oracle", vec![oracle_report(n)?]),
        Target::Bounds => {
            let nmax = nmax.unwrap_or(PROP31_MAX_N.min(12));
            let mut reports = vec![check_prop31(nmax, pmax.unwrap_or(PROP31_MAX_P))?];
            for m in 1..=nmax.min(LEMMA32_MAX_N) {
                reports.push(check_lemma32(m)?);
            }
            ("bounds", reports)
        }
        Target::Classical => ("classical", check_classical(&ClassicalLimits::default())),
        Target::Problem5 => {
            let mut report = CheckReport::new("problem5");
            for m in 2..=pmax.unwrap_or(3) {
                for n in 1..=nmax.unwrap_or(20) {
                    let r = problem5_max_ratio(n, m)?;
                    report.push(format!("n={n} m={m} t={}", r.t), &r.ratio, &r.closed_form, r.agree);
                }
            }
            ("problem5", vec![report])
        }
    };
    let summary: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "checked": r.checked(),
                "failures": r.failures().count(),
                "max_ratio": r.max_ratio,
                "max_ratio_at": r.max_ratio_at,
            })
        })
        .collect();
    let first = reports.iter().find_map(|r| r.first_failure().map(|f| (r.name.clone(), f)));
    let passed = first.is_none();
    let counterexample = first
        .as_ref()
        .map(|(name, f)| json!({"check": name, "params": f.params, "lhs": f.lhs, "rhs": f.rhs}));
    println!(
        "{}",
        json!({"target": name, "passed": passed, "checks": summary, "counterexample": counterexample})
    );
    match first {
        None => Ok(()),
        Some((name, f)) => Err(Failure::Verify(format!("{name} at {}: {} vs {}", f.params, f.lhs, f.rhs))),
    }
}

fn tabular_format(format: Format) -> Result<Format, Failure> {
    if format == Format::Bfile {
        return Err(Failure::Usage("bfile output applies only to integer rows".into()));
    }
    Ok(format)
}

fn emit(format: Format, header: &[&str], records: Vec<Vec<String>>, json_rows: Vec<Value>) -> CmdResult {
    let stdout = io::stdout().lock();
    match format {
        Format::Json => {
            let mut w = BufWriter::new(stdout);
            writeln!(w, "{}", Value::Array(json_rows))?;
            w.flush()?;
        }
        _ => {
            let mut w = csv::Writer::from_writer(stdout);
            w.write_record(header)?;
            for r in records {
                w.write_record(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn cmd_asym(series: Series) -> CmdResult {
    match series {
        Series::Bnx { n, xmin, xmax, step, format } => {
            let format = tabular_format(format)?;
            let row = load_row(n, &Limits { force: false })?;
            let grid = x_grid(xmin, xmax, step)?;
            let points = b_n_x_series(&row, &grid)?;
            let records = points
                .iter()
                .map(|p| vec![p.x.to_string(), p.b_n_x.to_string(), p.gauss.to_string(), p.abs_err.to_string()])
                .collect();
            let json_rows = points
                .iter()
                .map(|p| json!({"x": p.x, "k": p.k, "b_n_x": p.b_n_x, "gauss": p.gauss, "abs_err": p.abs_err}))
                .collect();
            emit(format, &["x", "b_n_x", "gauss", "abs_err"], records, json_rows)
        }
        Series::Rnk { n, format } => {
            let format = tabular_format(format)?;
            let row = load_row(n, &Limits { force: false })?;
            let points = r_nk_series(&row);
            let records = points
                .iter()
                .map(|p| {
                    vec![
                        p.k.to_string(),
                        p.r.reduced().to_string(),
                        p.n2_r.reduced().to_string(),
                        p.r.to_f64().to_string(),
                        p.n2_r.to_f64().to_string(),
                    ]
                })
                .collect();
            let json_rows = points
                .iter()
                .map(|p| {
                    json!({
                        "k": p.k,
                        "R": p.r.reduced().to_string(),
                        "n2_R": p.n2_r.reduced().to_string(),
                        "R_approx": p.r.to_f64(),
                        "n2_R_approx": p.n2_r.to_f64(),
                    })
                })
                .collect();
            emit(format, &["k", "R", "n2_R", "R_approx", "n2_R_approx"], records, json_rows)
        }
        Series::Xn { nmax, format } => {
            let format = tabular_format(format)?;
            let rows = x_n_check(nmax)?;
            let records = rows
                .iter()
                .map(|r| vec![r.n.to_string(), r.x_n.to_string(), r.ratio.to_string()])
                .collect();
            let json_rows = rows
                .iter()
                .map(|r| json!({"n": r.n, "X_n": r.x_n.to_string(), "ratio": r.ratio}))
                .collect();
            emit(format, &["n", "X_n", "ratio"], records, json_rows)
        }
    }
}
