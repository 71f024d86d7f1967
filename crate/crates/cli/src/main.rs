//! `ulis`: counts, series, bijections, sampling and verification suites for
//! permutations with a unique longest increasing subsequence.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use render::{records, to_json, Format, Sequence};
use ulis_core::bijections::{ck_f, ck_f_inverse, phi, psi, rs_insert, YoungTableau};
use ulis_core::enumerate::{count_bidirectional_ballot, Enumerator, ObjectClass, DEFAULT_CEILING};
use ulis_core::sampler::{estimate_ank, estimate_ank_parallel, DEFAULT_KMAX};
use ulis_core::series::{
    closed_form_u231, find_real_root, indecomposable_from_total, rational_poly, solve_u231,
    u231_radicand, PowerSeries,
};
use ulis_core::trees::TreeCountDp;
use ulis_core::verify::{run_suite, Faults, Suite, VerifyOptions};
use ulis_core::Permutation;

#[derive(Parser)]
#[command(
    name = "ulis",
    version,
    about = "Permutations with a unique longest increasing subsequence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact counts u_n(q), i_n(q), ballot sequences and totals.
    Count(CountArgs),
    /// Coefficients of the generating function of u_n(q).
    Series(SeriesArgs),
    /// Dominant singularity of the u_n(231) generating function.
    Singularity(SingularityArgs),
    /// Exact ratios u_n(132) / C_n.
    Ratios(RatiosArgs),
    /// Monte Carlo estimate of the number of deepest leaves in random plane trees.
    Sample(SampleArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Apply a bijection to a permutation.
    Bijection(BijectionArgs),
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    /// q-avoiders with a ULIS
    Perm,
    /// q-avoiding involutions with a ULIS
    Inv,
    /// bidirectional ballot sequences of length n
    Ballot,
    /// all q-avoiders
    Total,
    /// all q-avoiding involutions
    InvTotal,
}

impl Class {
    fn object_class(self) -> ObjectClass {
        match self {
            Class::Perm => ObjectClass::Permutations,
            Class::Inv => ObjectClass::Involutions,
            Class::Ballot => ObjectClass::Ballot,
            Class::Total => ObjectClass::AvoidersTotal,
            Class::InvTotal => ObjectClass::InvolutionAvoidersTotal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Series,
    TreeDp,
}

#[derive(Args)]
struct CountArgs {
    /// Pattern of length 3, as `231` or `2,3,1`.
    #[arg(long, value_parser = parse_perm)]
    pattern: Option<Permutation>,
    #[arg(long, value_enum, default_value_t = Class::Perm)]
    class: Class,
    #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
    method: MethodArg,
    /// Smallest n (default 0 for perm and total, 1 otherwise).
    #[arg(long)]
    min_n: Option<usize>,
    #[arg(long)]
    max_n: usize,
    /// Largest n the brute-force enumerator accepts.
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    /// fixed-point iteration of the functional equation (231 only)
    Solve,
    /// expansion of the closed form (231 only)
    Closed,
    /// brute-force counts
    Brute,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_parser = parse_perm)]
    pattern: Permutation,
    /// Number of coefficients, starting at z^0.
    #[arg(long, default_value_t = 10)]
    terms: usize,
    #[arg(long, value_enum, default_value_t = Route::Solve)]
    route: Route,
    /// Print u_1 = 1 - 1/u instead of u.
    #[arg(long)]
    indecomposable: bool,
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SingularityArgs {
    /// Width of the final bisection bracket.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct RatiosArgs {
    #[arg(long, default_value_t = 30)]
    max_n: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SampleArgs {
    /// Tree size in vertices.
    #[arg(long, default_value_t = 200)]
    n: usize,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// Required with --format json; chosen from the clock otherwise.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_KMAX)]
    kmax: usize,
    /// 1 selects the single-stream generator; more uses one substream per worker.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Fault {
    Sqrt,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 9)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<Fault>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BijectionMap {
    /// 132-avoider to plane tree
    Psi,
    /// 132-avoider to Dyck path
    Phi,
    /// 321-avoider to indecomposable 321-avoider of length n + 1
    F,
    /// inverse of f
    FInverse,
    /// Robinson-Schensted tableau pair
    Rs,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(value_enum)]
    map: BijectionMap,
    /// Permutation in one-line notation, e.g. 3,5,1,2,4.
    #[arg(long, value_parser = parse_perm)]
    perm: Permutation,
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse::<Permutation>().map_err(|e| e.to_string())
}

/// What a successful or failed run prints and how it exits.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

type Run = Result<Outcome, String>;

fn usage<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let (result, out) = match &cli.command {
        Command::Count(a) => (cmd_count(a), a.output.out.as_ref()),
        Command::Series(a) => (cmd_series(a), a.output.out.as_ref()),
        Command::Singularity(a) => (cmd_singularity(a), a.output.out.as_ref()),
        Command::Ratios(a) => (cmd_ratios(a), a.output.out.as_ref()),
        Command::Sample(a) => (cmd_sample(a), a.output.out.as_ref()),
        Command::Verify(a) => (cmd_verify(a), a.out.as_ref()),
        Command::Bijection(a) => (cmd_bijection(a), None),
    };
    match result {
        Ok(outcome) => {
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(path, &outcome.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{}", outcome.text),
            }
            ExitCode::from(outcome.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn check_threads(threads: usize) -> Result<(), String> {
    if threads == 0 {
        return usage("--threads must be at least 1");
    }
    Ok(())
}

fn pattern_name(p: &Option<Permutation>) -> Value {
    p.as_ref()
        .map_or(Value::Null, |q| Value::String(q.to_string()))
}

fn cmd_count(a: &CountArgs) -> Run {
    check_threads(a.threads)?;
    let class = a.class.object_class();
    if a.class == Class::Ballot {
        if a.pattern.is_some() {
            return usage("--class ballot takes no --pattern");
        }
    } else if a.pattern.is_none() {
        return usage(format!("--class {} needs --pattern", class.name()));
    }
    let min_n = a
        .min_n
        .unwrap_or(if matches!(a.class, Class::Perm | Class::Total) {
            0
        } else {
            1
        });
    if min_n > a.max_n {
        return usage(format!("--min-n {min_n} exceeds --max-n {}", a.max_n));
    }
    let pattern_is = |s: &str| a.pattern.as_ref().is_some_and(|p| p.to_string() == s);
    let counts: Vec<BigUint> = match a.method {
        MethodArg::Series => {
            if a.class != Class::Perm || !pattern_is("2,3,1") {
                return usage("--method series supports only --pattern 231 --class perm");
            }
            let u = solve_u231(a.max_n);
            let ints = u.integer_coeffs().expect("u_231 has integer coefficients");
            (min_n..=a.max_n)
                .map(|n| ints[n].to_biguint().expect("counts are nonnegative"))
                .collect()
        }
        MethodArg::TreeDp => {
            if a.class != Class::Perm || !pattern_is("1,3,2") {
                return usage("--method tree-dp supports only --pattern 132 --class perm");
            }
            let dp = TreeCountDp::new(a.max_n + 1);
            (min_n..=a.max_n)
                .map(|n| dp.u132(n).expect("table sized for max_n + 1"))
                .collect()
        }
        MethodArg::Brute => match &a.pattern {
            None => (min_n..=a.max_n)
                .map(count_bidirectional_ballot)
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?,
            Some(q) => Enumerator::new()
                .with_ceiling(a.ceiling)
                .with_threads(a.threads)
                .table(q, class, min_n, a.max_n)
                .map_err(|e| e.to_string())?
                .counts(),
        },
    };
    let method = match a.method {
        MethodArg::Brute => "brute",
        MethodArg::Series => "series",
        MethodArg::TreeDp => "tree-dp",
    };
    let mut config = Map::new();
    config.insert("command".into(), json!("count"));
    config.insert("pattern".into(), pattern_name(&a.pattern));
    config.insert("class".into(), json!(class.name()));
    config.insert("method".into(), json!(method));
    config.insert("min_n".into(), json!(min_n));
    config.insert("max_n".into(), json!(a.max_n));
    config.insert("ceiling".into(), json!(a.ceiling));
    config.insert("threads".into(), json!(a.threads));
    let seq = Sequence {
        config,
        method: method.to_string(),
        rows: (min_n..)
            .zip(counts.iter().map(BigUint::to_string))
            .collect(),
    };
    Ok(Outcome::ok(seq.render(a.output.format)))
}

fn cmd_series(a: &SeriesArgs) -> Run {
    check_threads(a.threads)?;
    if a.terms == 0 {
        return usage("--terms must be at least 1");
    }
    let order = a.terms - 1;
    let is_231 = a.pattern.to_string() == "2,3,1";
    let u = match a.route {
        Route::Solve | Route::Closed if !is_231 => {
            return usage(
                "--route solve and --route closed support only --pattern 231; use --route brute",
            );
        }
        Route::Solve => solve_u231(order),
        Route::Closed => closed_form_u231(order).map_err(|e| e.to_string())?,
        Route::Brute => {
            let counts = Enumerator::new()
                .with_ceiling(a.ceiling)
                .with_threads(a.threads)
                .table(&a.pattern, ObjectClass::Permutations, 0, order)
                .map_err(|e| e.to_string())?
                .counts();
            PowerSeries::from_biguints(&counts, order)
        }
    };
    let shown = if a.indecomposable {
        indecomposable_from_total(&u).map_err(|e| e.to_string())?
    } else {
        u
    };
    let coeffs = shown
        .integer_coeffs()
        .ok_or("series has non-integer coefficients")?;
    let route = match a.route {
        Route::Solve => "solve",
        Route::Closed => "closed",
        Route::Brute => "brute",
    };
    let mut config = Map::new();
    config.insert("command".into(), json!("series"));
    config.insert("pattern".into(), json!(a.pattern.to_string()));
    config.insert("terms".into(), json!(a.terms));
    config.insert("route".into(), json!(route));
    config.insert("indecomposable".into(), json!(a.indecomposable));
    let seq = Sequence {
        config,
        method: if a.route == Route::Brute {
            "brute"
        } else {
            "series"
        }
        .to_string(),
        rows: coeffs.iter().map(ToString::to_string).enumerate().collect(),
    };
    Ok(Outcome::ok(seq.render(a.output.format)))
}

fn cmd_singularity(a: &SingularityArgs) -> Run {
    if !(a.tol.is_finite() && a.tol > 0.0) {
        return usage("--tol must be a positive number");
    }
    let (lo, hi) = (0.0, 0.5);
    let root = find_real_root(&rational_poly(&u231_radicand()), lo, hi, a.tol)
        .map_err(|e| e.to_string())?;
    let text = match a.output.format {
        Format::Table => format!("root        {root:.12}\nreciprocal  {:.12}\n", 1.0 / root),
        Format::Csv => format!("root,reciprocal\n{root:.12},{:.12}\n", 1.0 / root),
        Format::Json => to_json(&json!({
            "config": { "command": "singularity", "polynomial": u231_radicand(), "bracket": [lo, hi], "tol": a.tol },
            "root": root,
            "reciprocal": 1.0 / root,
        })),
        Format::Bfile => return usage("--format bfile applies only to integer sequences"),
    };
    Ok(Outcome::ok(text))
}

fn cmd_ratios(a: &RatiosArgs) -> Run {
    if a.max_n == 0 {
        return usage("--max-n must be at least 1");
    }
    let rows = TreeCountDp::new(a.max_n + 1)
        .ratio_report(a.max_n)
        .map_err(|e| e.to_string())?;
    let text = match a.output.format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "u132": r.u132.to_string(),
                        "catalan": r.catalan.to_string(),
                        "ratio": r.ratio.to_string(),
                        "real": r.real,
                        "diagnostic": r.diagnostic,
                    })
                })
                .collect();
            to_json(&json!({
                "config": { "command": "ratios", "max_n": a.max_n },
                "rows": rows,
                "method": "tree-dp",
            }))
        }
        Format::Bfile => return usage("--format bfile applies only to integer sequences"),
        format => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.u132.to_string(),
                        r.catalan.to_string(),
                        format!("{:.12}", r.real),
                        r.diagnostic.clone(),
                    ]
                })
                .collect();
            records(&["n", "u132", "catalan", "ratio", "note"], &table, format)
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_sample(a: &SampleArgs) -> Run {
    check_threads(a.threads)?;
    if a.n == 0 || a.trials == 0 || a.kmax == 0 {
        return usage("--n, --trials and --kmax must be at least 1");
    }
    if a.output.format == Format::Bfile {
        return usage("--format bfile applies only to integer sequences");
    }
    let (seed, auto) = match a.seed {
        Some(s) => (s, false),
        None if a.output.format == Format::Json => {
            return usage("--format json requires --seed");
        }
        None => {
            let nanos = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_nanos());
            (nanos as u64, true)
        }
    };
    let report = if a.threads == 1 {
        estimate_ank(a.n, a.kmax, a.trials, seed)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(a.threads)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| estimate_ank_parallel(a.n, a.kmax, a.trials, seed, a.threads))
    };
    let text = match a.output.format {
        Format::Json => to_json(&json!({
            "config": {
                "command": "sample",
                "n": a.n,
                "trials": a.trials,
                "seed": seed,
                "kmax": a.kmax,
                "threads": a.threads,
            },
            "report": serde_json::to_value(&report).expect("report serializes"),
        })),
        format => {
            let mut rows: Vec<Vec<String>> = report
                .estimates
                .iter()
                .map(|e| {
                    vec![
                        e.k.to_string(),
                        e.hits.to_string(),
                        format!("{:.6}", e.fraction),
                        format!("{:.6}", e.std_error),
                    ]
                })
                .collect();
            let o = &report.overflow;
            rows.push(vec![
                format!(">{}", a.kmax),
                o.hits.to_string(),
                format!("{:.6}", o.fraction),
                format!("{:.6}", o.std_error),
            ]);
            let body = records(&["k", "hits", "fraction", "std_error"], &rows, format);
            if format == Format::Table {
                let tag = if auto { " (auto)" } else { "" };
                format!(
                    "n {} trials {} seed {seed}{tag} streams {}\nrng {}\n{body}",
                    report.n, report.trials, report.streams, report.rng
                )
            } else {
                body
            }
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_verify(a: &VerifyArgs) -> Run {
    check_threads(a.threads)?;
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse::<Suite>()?]
    };
    let opts = VerifyOptions {
        max_n: a.max_n,
        threads: a.threads,
        faults: Faults {
            sqrt: a.inject_fault == Some(Fault::Sqrt),
        },
    };
    let mut text = String::new();
    let mut first_failure = None;
    for suite in suites {
        let report = run_suite(suite, &opts);
        text.push_str(&report.to_string());
        text.push('\n');
        if first_failure.is_none() {
            if let Some(c) = report.first_failure() {
                first_failure = Some(format!("{suite}/{}: {}", c.name, c.detail));
            }
        }
    }
    Ok(match first_failure {
        Some(f) => {
            text.push_str(&format!("first counterexample: {f}\n"));
            Outcome { text, code: 2 }
        }
        None => Outcome::ok(text),
    })
}

fn tableau_inline(t: &YoungTableau) -> String {
    let rows: Vec<String> = t
        .rows
        .iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join(" / "))
}

fn cmd_bijection(a: &BijectionArgs) -> Run {
    let text = match a.map {
        BijectionMap::Psi => psi(&a.perm).map_err(|e| e.to_string())?.to_string(),
        BijectionMap::Phi => phi(&a.perm).map_err(|e| e.to_string())?.to_string(),
        BijectionMap::F => ck_f(&a.perm).map_err(|e| e.to_string())?.to_string(),
        BijectionMap::FInverse => ck_f_inverse(&a.perm)
            .map_err(|e| e.to_string())?
            .to_string(),
        BijectionMap::Rs => {
            let (p, q) = rs_insert(&a.perm);
            if p == q {
                format!("P=Q={}", tableau_inline(&p))
            } else {
                format!("P={}\nQ={}", tableau_inline(&p), tableau_inline(&q))
            }
        }
    };
    Ok(Outcome::ok(text + "\n"))
}
