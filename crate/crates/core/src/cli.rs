//! Command-line front end. Every subcommand writes one JSON report (or a TRN
//! file for `gen`) that embeds the tool version and the resolved
//! configuration, so a report alone is enough to reproduce a run.
//!
//! Exit status: 0 success, 1 a verification failure, 2 usage, input or
//! capacity errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{
    circulant_tournament, figure4_tournament, paley_tournament, random_tournament, rotational_tournament,
    t2_tournament, t3_tournament, T2Spec, T3Spec,
};
use crate::error::{Error, Result};
use crate::extend::{is_path_extendable, nonextendable_paths};
use crate::metrics::{irregularity, pi2_with_argmin};
use crate::montecarlo::{pi2_tail_experiment, write_tail_csv, TailExperiment};
use crate::tournament::{Tournament, VertexSet};
use crate::verify::{
    check_all, enumerate_regular, regular_class_report, sweep_exhaustive, sweep_sampled, CheckOptions,
    SweepOptions, TheoremId, t0_candidates,
};

pub const TOOL: &str = "pathext";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "pathext", version, about = "Path extendability in tournaments")]
pub struct Cli {
    /// Worker threads (default: all cores). Never changes any output.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    /// Generate a tournament from one of the built-in families.
    Gen(GenArgs),
    /// Report π₂, irregularity and related quantities of a tournament.
    Analyze(AnalyzeArgs),
    /// Check inequalities and implications on one tournament or a sweep.
    Verify(VerifyArgs),
    /// Decide path extendability exactly.
    VerifyExtend(VerifyExtendArgs),
    /// Tail experiment for π₂ of random oriented graphs.
    Mc(McArgs),
    /// List regular tournaments of odd order up to isomorphism.
    EnumerateRegular(EnumerateArgs),
    /// Find the regular 7-vertex tournament that is not {2+}-path extendable.
    RediscoverT0(RediscoverArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Paley,
    Transitive,
    Random,
    Circulant,
    Rotational,
    T3,
    T2,
    Figure4,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Trn,
    Json,
}

#[derive(Args, Debug, Serialize)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Prime order of a Paley tournament.
    #[arg(long)]
    pub q: Option<usize>,
    /// Order (transitive, random, circulant, rotational).
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated circulant offsets.
    #[arg(long)]
    pub offsets: Option<String>,
    /// 3-block family parameter.
    #[arg(long)]
    pub t: Option<usize>,
    /// 5-part family: path order.
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub n0: Option<usize>,
    #[arg(long)]
    pub n1: Option<usize>,
    /// Figure-4 parameter.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Trn)]
    pub format: Format,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct AnalyzeArgs {
    /// TRN or JSON tournament file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    /// Theorem id, comma-separated ids, or `all`.
    #[arg(long, default_value = "all")]
    pub theorem: String,
    /// Single tournament to check.
    #[arg(long, conflicts_with_all = ["n", "exhaustive", "samples"])]
    pub input: Option<PathBuf>,
    /// Order for sweeps.
    #[arg(long)]
    pub n: Option<usize>,
    /// Every labelled tournament of order n.
    #[arg(long, requires = "n", conflicts_with = "samples")]
    pub exhaustive: bool,
    /// Number of random tournaments of order n.
    #[arg(long, requires = "n")]
    pub samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Only examine tournaments with at least this π₂.
    #[arg(long)]
    pub min_pi2: Option<usize>,
    /// Largest set size for the set-surplus checks.
    #[arg(long, default_value_t = 6)]
    pub max_set_size: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyExtendArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Only paths with at least this many arcs count.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Also list up to this many non-extendable paths.
    #[arg(long, default_value_t = 0)]
    pub certificates: usize,
    /// Report `elapsed_ms` as 0 so reports are byte-reproducible.
    #[arg(long)]
    pub no_timing: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct McArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Per-trial rows as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct RediscoverArgs {
    /// Also write the tournament as TRN here.
    #[arg(long)]
    pub trn: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A finished subcommand: the text to emit and whether a check failed.
struct Outcome {
    text: String,
    failed: bool,
}

fn report(config: &Command, result: Value) -> Result<String> {
    let doc = json!({
        "tool": TOOL,
        "version": VERSION,
        "config": config,
        "result": result,
    });
    let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_err(p, e)),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string())),
    }
}

/// Reads TRN, or the JSON mirror when the file starts with `{`.
pub fn read_tournament(path: &Path) -> Result<Tournament> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    if text.trim_start().starts_with('{') {
        Tournament::from_json(&text)
    } else {
        Tournament::from_trn(&text)
    }
}

fn need<T>(v: Option<T>, flag: &str, family: Family) -> Result<T> {
    v.ok_or_else(|| Error::Argument(format!("--{flag} is required for family {family:?}")))
}

pub fn generate(a: &GenArgs) -> Result<Tournament> {
    let f = a.family;
    match f {
        Family::Paley => paley_tournament(need(a.q, "q", f)?),
        Family::Transitive => Tournament::transitive(need(a.n, "n", f)?),
        Family::Random => random_tournament(need(a.n, "n", f)?, a.seed),
        Family::Rotational => rotational_tournament(need(a.n, "n", f)?),
        Family::Circulant => {
            let offsets = need(a.offsets.as_deref(), "offsets", f)?
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|e| Error::Argument(format!("offset {s:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            if offsets.iter().any(|&o| o >= 32) {
                return Err(Error::Argument("offsets must be below the order".into()));
            }
            circulant_tournament(need(a.n, "n", f)?, VertexSet::from_vertices(offsets))
        }
        Family::T3 => t3_tournament(T3Spec::new(need(a.t, "t", f)?)?),
        Family::T2 => {
            let spec = T2Spec::new(need(a.p, "p", f)?, need(a.n0, "n0", f)?, need(a.n1, "n1", f)?)?;
            t2_tournament(spec, a.seed)?.ok_or_else(|| {
                Error::Domain(format!("no regular completion found for {spec:?} with seed {}", a.seed))
            })
        }
        Family::Figure4 => figure4_tournament(need(a.k, "k", f)?, a.seed),
    }
}

fn run_gen(a: &GenArgs) -> Result<Outcome> {
    let t = generate(a)?;
    let text = match a.format {
        Format::Trn => t.to_trn(),
        Format::Json => t.to_json() + "\n",
    };
    Ok(Outcome { text, failed: false })
}

/// The `analyze` payload.
pub fn analysis(t: &Tournament) -> Value {
    let n = t.order() as i64;
    let (pi, (u, v)) = pi2_with_argmin(t);
    let i = irregularity(t) as i64;
    let sup = if n < 3 {
        Value::Null
    } else if n % 2 == 0 {
        json!((n - 4) as f64 / 4.0)
    } else {
        json!((n - 3) as f64 / 4.0)
    };
    json!({
        "n": n,
        "i": i,
        "pi2": pi,
        "pi2_argmin_pair": [u, v],
        "supremum_bound": sup,
        "irregularity_slack": n - 4 * pi as i64 - 3 - i,
        "regular": t.is_regular(),
        "score_sequence": t.score_sequence(),
    })
}

fn run_analyze(cmd: &Command, a: &AnalyzeArgs) -> Result<Outcome> {
    let t = read_tournament(&a.input)?;
    Ok(Outcome { text: report(cmd, analysis(&t))?, failed: false })
}

fn run_verify(cmd: &Command, a: &VerifyArgs) -> Result<Outcome> {
    let ids = TheoremId::parse_list(&a.theorem)?;
    let check = CheckOptions { max_set_size: a.max_set_size, ..CheckOptions::default() };
    let opts = SweepOptions { check, min_pi2: a.min_pi2 };
    if let Some(path) = &a.input {
        let t = read_tournament(path)?;
        let results = check_all(&t, &ids, check)?;
        let failed = results.iter().any(|r| !r.holds);
        let result = json!({ "failures": results.iter().filter(|r| !r.holds).count(), "results": results });
        return Ok(Outcome { text: report(cmd, result)?, failed });
    }
    let n = a.n.ok_or_else(|| Error::Argument("give --input, or --n with --exhaustive or --samples".into()))?;
    let summary = if a.exhaustive {
        sweep_exhaustive(n, &ids, opts)?
    } else if let Some(samples) = a.samples {
        sweep_sampled(n, &ids, samples, a.seed, opts)?
    } else {
        return Err(Error::Argument("--n needs --exhaustive or --samples".into()));
    };
    let failed = summary.total_failures() > 0;
    let result = json!({ "failures": summary.total_failures(), "summary": summary });
    Ok(Outcome { text: report(cmd, result)?, failed })
}

fn run_verify_extend(cmd: &Command, a: &VerifyExtendArgs) -> Result<Outcome> {
    let t = read_tournament(&a.input)?;
    let start = Instant::now();
    let verdict = is_path_extendable(&t, a.k)?;
    let certificates = if a.certificates > 0 { Some(nonextendable_paths(&t, a.certificates)?) } else { None };
    let elapsed_ms = if a.no_timing { 0 } else { start.elapsed().as_millis() as u64 };
    let mut result = json!({
        "extendable": verdict.extendable,
        "k": a.k,
        "certificate": verdict.certificate,
        "subsets_checked": verdict.subsets_checked,
        "elapsed_ms": elapsed_ms,
    });
    if let Some(c) = certificates {
        result["certificates"] = json!(c);
    }
    Ok(Outcome { text: report(cmd, result)?, failed: false })
}

fn run_mc(cmd: &Command, a: &McArgs) -> Result<Outcome> {
    let spec = TailExperiment::new(a.n, a.p, a.epsilon, a.trials, a.seed)?;
    let (filled, rows) = pi2_tail_experiment(&spec)?;
    if let Some(path) = &a.csv {
        let file = fs::File::create(path).map_err(|e| io_err(path, e))?;
        write_tail_csv(&rows, std::io::BufWriter::new(file))?;
    }
    let result = json!({
        "experiment": filled,
        "threshold": filled.threshold(),
        "observed_fraction": filled.observed_fraction(),
        "bound": filled.bound,
        "bound_informative": filled.bound < 1.0,
        "within_bound": filled.within_bound(),
    });
    Ok(Outcome { text: report(cmd, result)?, failed: false })
}

fn run_enumerate(cmd: &Command, a: &EnumerateArgs) -> Result<Outcome> {
    let classes = enumerate_regular(a.n)?;
    let reports = classes.iter().map(regular_class_report).collect::<Result<Vec<_>>>()?;
    let result = json!({ "n": a.n, "classes": reports.len(), "tournaments": reports });
    Ok(Outcome { text: report(cmd, result)?, failed: false })
}

fn run_rediscover(cmd: &Command, a: &RediscoverArgs) -> Result<Outcome> {
    let candidates = t0_candidates()?;
    let unique = candidates.len() == 1;
    if unique {
        if let Some(path) = &a.trn {
            fs::write(path, candidates[0].to_trn()).map_err(|e| io_err(path, e))?;
        }
    } else {
        eprintln!(
            "pathext: expected exactly one regular 7-vertex class failing {{2+}}-path extendability, found {}",
            candidates.len()
        );
    }
    let reports = candidates
        .iter()
        .map(|t| {
            let mut r = regular_class_report(t)?;
            r["analysis"] = analysis(t);
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    let result = json!({ "unique": unique, "candidates": reports });
    Ok(Outcome { text: report(cmd, result)?, failed: !unique })
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Gen(a) => run_gen(a),
        Command::Analyze(a) => run_analyze(cmd, a),
        Command::Verify(a) => run_verify(cmd, a),
        Command::VerifyExtend(a) => run_verify_extend(cmd, a),
        Command::Mc(a) => run_mc(cmd, a),
        Command::EnumerateRegular(a) => run_enumerate(cmd, a),
        Command::RediscoverT0(a) => run_rediscover(cmd, a),
    }
}

fn out_path(cmd: &Command) -> Option<&Path> {
    match cmd {
        Command::Gen(a) => a.out.as_deref(),
        Command::Analyze(a) => a.out.as_deref(),
        Command::Verify(a) => a.out.as_deref(),
        Command::VerifyExtend(a) => a.out.as_deref(),
        Command::Mc(a) => a.out.as_deref(),
        Command::EnumerateRegular(a) => a.out.as_deref(),
        Command::RediscoverT0(a) => a.out.as_deref(),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        // A failed existence/uniqueness assertion is a verification outcome.
        Error::Domain(_) => 1,
        _ => 2,
    }
}

/// Parses `argv` and runs the subcommand; returns the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("pathext: cannot start worker pool: {e}");
            return 2;
        }
    };
    let outcome = pool.install(|| dispatch(&cli.command));
    match outcome.and_then(|o| emit(out_path(&cli.command), &o.text).map(|_| o.failed)) {
        Ok(false) => 0,
        Ok(true) => 1,
        Err(e) => {
            eprintln!("pathext: {e}");
            exit_code(&e)
        }
    }
}
