//! Command-line front end.
//!
//! ```text
//! zetaforge verify <identity> [--m N] [--s P/Q] [--t P/Q] [--digits D]
//!                  [--mode direct|accelerated] [--max-terms N] [--output text|json]
//! zetaforge table --identity general|milgram --m-range A..B [--digits D] [--format csv|json]
//! zetaforge bench --identity <identity> --digits 10,20,30 --modes accelerated,direct
//! zetaforge cache [--path FILE] --up-to N
//! ```
//!
//! Exit status: 0 when every report passes, 1 when a residual exceeds its
//! tolerance, 2 for usage errors, 3 for numeric and I/O failures.

mod document;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::thread;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::identities::{
    eval_general, eval_milgram, eval_param_sum, eval_sum_a, eval_sum_b, eval_tyagi_holm, eval_zeta3, ln2_report,
    IdentityReport, SeriesMode, SeriesOptions,
};
use crate::numkernel::{make_context, EvalContext, ExactRational, DEFAULT_GUARD_DIGITS};
use crate::ratseq::{cache_load, cache_store, install_table, BernoulliTable};

pub use document::{
    rational_label, sci_upper, BenchDocument, BenchRow, CheckEntry, ContextEcho, DecimalValue, ParamEntry,
    ReportDocument, ReportEntry, SeriesEntry, SCHEMA_VERSION,
};

/// Environment variable naming the Bernoulli cache file.
pub const CACHE_ENV: &str = "ZETAFORGE_CACHE";
pub const DEFAULT_CACHE_PATH: &str = "bernoulli.cache";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "zetaforge", version, about = "Certify zeta-series identities for ln 2 and odd zeta values")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one identity and report the residual against its oracle.
    Verify(VerifyArgs),
    /// Evaluate a ranged identity for every m in a range.
    Table(TableArgs),
    /// Compare terms used and accuracy across digit targets and modes.
    Bench(BenchArgs),
    /// Write the Bernoulli cache file.
    Cache(CacheArgs),
}

/// Identities the CLI can evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Ln2,
    Zeta3,
    General,
    Milgram,
    TyagiHolm,
    SumA,
    SumB,
    ParamSum,
}

impl Identity {
    fn takes_m(self) -> bool {
        matches!(self, Identity::General | Identity::Milgram)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Direct,
    Accelerated,
}

impl From<ModeArg> for SeriesMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Direct => SeriesMode::Direct,
            ModeArg::Accelerated => SeriesMode::Accelerated,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    identity: Identity,
    /// Index for general and milgram.
    #[arg(long)]
    m: Option<u32>,
    /// Exponent for tyagi-holm, as p/q.
    #[arg(long, value_parser = parse_rational)]
    s: Option<ExactRational>,
    /// Parameter for param-sum, as p/q.
    #[arg(long, value_parser = parse_rational)]
    t: Option<ExactRational>,
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
    digits: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Accelerated)]
    mode: ModeArg,
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_terms: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    identity: Identity,
    /// Inclusive range `a..b`.
    #[arg(long, value_parser = parse_range)]
    m_range: MRange,
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
    digits: u32,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum)]
    identity: Identity,
    #[arg(long, value_delimiter = ',', default_value = "10,20,30", value_parser = clap::value_parser!(u32).range(1..))]
    digits: Vec<u32>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "accelerated,direct")]
    modes: Vec<ModeArg>,
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_terms: u64,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long, value_parser = parse_rational, default_value = "3/2")]
    s: ExactRational,
    #[arg(long, value_parser = parse_rational, default_value = "1/2")]
    t: ExactRational,
}

#[derive(Args, Debug)]
struct CacheArgs {
    /// Cache file; defaults to $ZETAFORGE_CACHE, then `bernoulli.cache`.
    #[arg(long)]
    path: Option<PathBuf>,
    /// Largest even Bernoulli index to store.
    #[arg(long)]
    up_to: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct MRange {
    start: u32,
    end: u32,
}

fn parse_rational(s: &str) -> std::result::Result<ExactRational, String> {
    ExactRational::from_str(s).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<MRange, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got `{s}`"))?;
    let start: u32 = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let end: u32 = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    if start > end {
        return Err(format!("empty range `{s}`"));
    }
    Ok(MRange { start, end })
}

/// A fully validated request for one identity evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyRequest {
    pub identity: Identity,
    pub m: Option<u32>,
    pub s: Option<ExactRational>,
    pub t: Option<ExactRational>,
    pub digits: u32,
    pub options: SeriesOptions,
}

impl VerifyRequest {
    /// Checks that exactly the parameters the identity needs are present.
    pub fn validate(&self) -> Result<()> {
        let id = self.identity;
        let need = |present: bool, wanted: bool, flag: &str| -> Result<()> {
            match (present, wanted) {
                (false, true) => Err(Error::Usage(format!("{id} requires --{flag}"))),
                (true, false) => Err(Error::Usage(format!("{id} does not take --{flag}"))),
                _ => Ok(()),
            }
        };
        need(self.m.is_some(), id.takes_m(), "m")?;
        need(self.s.is_some(), id == Identity::TyagiHolm, "s")?;
        need(self.t.is_some(), id == Identity::ParamSum, "t")?;
        if self.m == Some(0) {
            return Err(Error::usage("m must be at least 1"));
        }
        Ok(())
    }

    pub fn context(&self) -> Result<EvalContext> {
        make_context(self.digits, DEFAULT_GUARD_DIGITS)
    }

    /// Runs the evaluator behind the request.
    pub fn evaluate(&self, ctx: &EvalContext) -> Result<IdentityReport> {
        self.validate()?;
        let opts = &self.options;
        let m = || self.m.expect("validated");
        match self.identity {
            Identity::Ln2 => ln2_report(ctx, opts),
            Identity::Zeta3 => eval_zeta3(ctx, opts),
            Identity::General => eval_general(m(), ctx, opts),
            Identity::Milgram => eval_milgram(m(), ctx, opts),
            Identity::TyagiHolm => eval_tyagi_holm(self.s.as_ref().expect("validated"), ctx, opts),
            Identity::SumA => eval_sum_a(ctx, opts),
            Identity::SumB => eval_sum_b(ctx, opts),
            Identity::ParamSum => eval_param_sum(self.t.as_ref().expect("validated"), ctx, opts),
        }
    }
}

/// Maps a library error to its exit status.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => EXIT_USAGE,
        _ => EXIT_ERROR,
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_PASS
            };
        }
    };
    let result = match cli.command {
        Command::Verify(a) => load_env_cache().and_then(|_| run_verify(a, out)),
        Command::Table(a) => load_env_cache().and_then(|_| run_table(a, out)),
        Command::Bench(a) => load_env_cache().and_then(|_| run_bench(a, out)),
        Command::Cache(a) => run_cache(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Installs the cache named by `ZETAFORGE_CACHE` when that file exists.
fn load_env_cache() -> Result<()> {
    if let Some(path) = std::env::var_os(CACHE_ENV) {
        let path = PathBuf::from(path);
        if path.exists() {
            install_table(&cache_load(&path)?);
        }
    }
    Ok(())
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e)
}

fn run_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let req = VerifyRequest {
        identity: a.identity,
        m: a.m,
        s: a.s,
        t: a.t,
        digits: a.digits,
        options: SeriesOptions { mode: a.mode.into(), max_terms: a.max_terms },
    };
    req.validate()?;
    let ctx = req.context()?;
    let start = Instant::now();
    let report = req.evaluate(&ctx)?;
    let doc = ReportDocument::new(&ctx, &[report], start.elapsed().as_millis() as u64);
    match a.output {
        OutputFormat::Json => writeln!(out, "{}", doc.to_json()).map_err(io_err)?,
        OutputFormat::Text => write!(out, "{}", render_text(&doc)).map_err(io_err)?,
    }
    Ok(if doc.all_pass() { EXIT_PASS } else { EXIT_FAIL })
}

fn run_table(a: TableArgs, out: &mut dyn Write) -> Result<i32> {
    if !a.identity.takes_m() {
        return Err(Error::Usage(format!("{} has no m parameter to range over", a.identity)));
    }
    if a.m_range.start == 0 {
        return Err(Error::usage("m must be at least 1"));
    }
    let ctx = make_context(a.digits, DEFAULT_GUARD_DIGITS)?;
    let requests: Vec<VerifyRequest> = (a.m_range.start..=a.m_range.end)
        .map(|m| VerifyRequest {
            identity: a.identity,
            m: Some(m),
            s: None,
            t: None,
            digits: a.digits,
            options: SeriesOptions::accelerated(),
        })
        .collect();
    let start = Instant::now();
    // one thread per row; results are collected in range order
    let results: Vec<Result<IdentityReport>> = thread::scope(|scope| {
        let handles: Vec<_> = requests.iter().map(|r| scope.spawn(move || r.evaluate(&ctx))).collect();
        handles.into_iter().map(|h| h.join().expect("evaluator panicked")).collect()
    });
    let reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    let doc = ReportDocument::new(&ctx, &reports, start.elapsed().as_millis() as u64);
    match a.format {
        TableFormat::Json => writeln!(out, "{}", doc.to_json()).map_err(io_err)?,
        TableFormat::Csv => write!(out, "{}", doc.to_csv()).map_err(io_err)?,
    }
    Ok(if doc.all_pass() { EXIT_PASS } else { EXIT_FAIL })
}

fn run_bench(a: BenchArgs, out: &mut dyn Write) -> Result<i32> {
    if a.identity == Identity::TyagiHolm && a.modes.contains(&ModeArg::Direct) {
        return Err(Error::usage("tyagi-holm has no direct mode"));
    }
    let mut modes: Vec<SeriesMode> = a.modes.iter().map(|&m| m.into()).collect();
    modes.sort();
    modes.dedup();
    let mut digits = a.digits.clone();
    digits.sort_unstable();
    digits.dedup();

    let mut rows = Vec::new();
    let mut params = Vec::new();
    for &mode in &modes {
        for &d in &digits {
            let req = VerifyRequest {
                identity: a.identity,
                m: a.identity.takes_m().then_some(a.m),
                s: (a.identity == Identity::TyagiHolm).then(|| a.s.clone()),
                t: (a.identity == Identity::ParamSum).then(|| a.t.clone()),
                digits: d,
                options: SeriesOptions { mode, max_terms: a.max_terms },
            };
            let ctx = req.context()?;
            let start = Instant::now();
            let report = req.evaluate(&ctx)?;
            let elapsed_ms = start.elapsed().as_millis() as u64;
            let entry = ReportEntry::from_report(&report, &ctx);
            params = entry.params.clone();
            rows.push(BenchRow {
                mode,
                digits: d,
                terms_used: entry.series.as_ref().map_or(0, |s| s.terms_used),
                digits_agreed: entry.digits_agreed,
                residual_upper: entry.residual_upper,
                pass: entry.pass,
                elapsed_ms,
            });
        }
    }
    let doc = BenchDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        identity: a.identity.to_string(),
        params,
        max_terms: a.max_terms,
        rows,
    };
    writeln!(out, "{}", doc.to_json()).map_err(io_err)?;
    Ok(EXIT_PASS)
}

fn run_cache(a: CacheArgs, out: &mut dyn Write) -> Result<i32> {
    if a.up_to == 0 || a.up_to % 2 == 1 {
        return Err(Error::Usage(format!("--up-to must be a positive even index, got {}", a.up_to)));
    }
    let path = a
        .path
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_PATH));
    let table = BernoulliTable::up_to(a.up_to);
    cache_store(&table, &path)?;
    writeln!(out, "wrote {} entries to {}", a.up_to / 2, path.display()).map_err(io_err)?;
    Ok(EXIT_PASS)
}

/// Human-readable rendering of a report document.
pub fn render_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    for r in &doc.reports {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        s.push_str(&format!("{} [{}]  {}\n", r.identity, r.param_label(), verdict));
        s.push_str(&format!("  lhs       {}\n", r.lhs.value));
        s.push_str(&format!("  rhs       {}\n", r.rhs.value));
        s.push_str(&format!(
            "  residual  <= {}  ({} digits agreed, tolerance {})\n",
            r.residual_upper, r.digits_agreed, r.tolerance
        ));
        if let Some(series) = &r.series {
            s.push_str(&format!(
                "  series    {}, {} terms, tail <= {}\n",
                series.mode, series.terms_used, series.tail_bound
            ));
        }
        for c in &r.checks {
            s.push_str(&format!("  check     {}: {}\n", c.name, if c.pass { "ok" } else { "FAILED" }));
        }
    }
    s.push_str(&format!("elapsed {} ms\n", doc.elapsed_ms));
    s
}
