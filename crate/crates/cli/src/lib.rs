//! Command implementations behind the `lejakit` binary. Each command
//! renders its output into a string so it can be tested without a process.

use std::fmt::Write as _;
use std::time::Instant;

use lejakit::bounds::{check_disc_suite, CheckStatus, Severity, check_interval_suite, figure_data, SuiteConfig, SuiteOutcome, SuiteReport};
use lejakit::lebesgue::{gamma, gamma_bound, LebesgueReport};
use lejakit::search::SearchStatus;
use lejakit::{lebesgue_report, leja_section, project_from_disc, Domain, LejaError, SearchConfig};
use serde::{Deserialize, Serialize};

pub mod manifest;

pub use manifest::RunManifest;

/// Exit codes used by the binary.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const BOUND_FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INCONCLUSIVE: i32 = 3;
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<LejaError> for CliError {
    fn from(e: LejaError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is ascii"))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct NodeRow {
    index: usize,
    angle_num: u64,
    angle_log2den: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    re: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    im: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<f64>,
}

fn node_rows(domain: Domain, k: usize) -> CliResult<Vec<NodeRow>> {
    if k == 0 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    Ok(match domain {
        Domain::Disc => {
            let s = leja_section(k)?;
            s.angles()
                .iter()
                .zip(s.points())
                .enumerate()
                .map(|(index, (a, z))| NodeRow {
                    index,
                    angle_num: a.num(),
                    angle_log2den: a.log2den(),
                    re: Some(z.re),
                    im: Some(z.im),
                    x: None,
                })
                .collect()
        }
        Domain::Interval => {
            let s = project_from_disc(k)?;
            s.folded()
                .iter()
                .zip(s.values())
                .enumerate()
                .map(|(index, (a, &x))| NodeRow {
                    index,
                    angle_num: a.num(),
                    angle_log2den: a.log2den(),
                    re: None,
                    im: None,
                    x: Some(x),
                })
                .collect()
        }
    })
}

/// First `k` nodes of the canonical sequence. Angles are `pi * num / 2^log2den`
/// (folded into `[0, pi]` on the interval).
pub fn cmd_gen(domain: Domain, k: usize, format: Format) -> CliResult<String> {
    let rows = node_rows(domain, k)?;
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&rows).expect("serializable") + "\n"),
        Format::Csv => {
            let mut w = csv_writer();
            match domain {
                Domain::Disc => w.write_record(["index", "angle_num", "angle_log2den", "re", "im"])?,
                Domain::Interval => w.write_record(["index", "angle_num", "angle_log2den", "x"])?,
            }
            for r in rows {
                let mut rec = vec![r.index.to_string(), r.angle_num.to_string(), r.angle_log2den.to_string()];
                match domain {
                    Domain::Disc => {
                        rec.push(fmt_f64(r.re.unwrap_or_default()));
                        rec.push(fmt_f64(r.im.unwrap_or_default()));
                    }
                    Domain::Interval => rec.push(fmt_f64(r.x.unwrap_or_default())),
                }
                w.write_record(&rec)?;
            }
            finish(w)
        }
    }
}

fn status_str(s: SearchStatus) -> &'static str {
    match s {
        SearchStatus::Converged => "converged",
        SearchStatus::Inconclusive => "inconclusive",
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

pub const LEBESGUE_HEADER: [&str; 13] = [
    "domain",
    "k",
    "lambda_at_next",
    "lambda2_at_next",
    "L",
    "L2",
    "argmax_theta",
    "argmax2_theta",
    "D_k",
    "sup_W",
    "beta",
    "status",
    "conjecture_3k",
];

/// One [`LebesgueReport`] per `k`. Timings are left out so the CSV is
/// byte-stable; total wall time goes into the manifest.
pub fn lebesgue_rows(domain: Domain, kmin: usize, kmax: usize, cfg: &SearchConfig) -> CliResult<Vec<LebesgueReport>> {
    if kmin == 0 || kmin > kmax {
        return Err(CliError::Usage(format!("need 1 <= kmin <= kmax, got kmin = {kmin}, kmax = {kmax}")));
    }
    cfg.validate()?;
    (kmin..=kmax).map(|k| lebesgue_report(domain, k, cfg).map_err(CliError::from)).collect()
}

pub fn lebesgue_csv(rows: &[LebesgueReport]) -> CliResult<String> {
    let mut w = csv_writer();
    w.write_record(LEBESGUE_HEADER)?;
    for r in rows {
        let conj = match r.domain {
            Domain::Interval => {
                if r.lebesgue <= 3.0 * r.k as f64 {
                    "holds"
                } else {
                    "violated"
                }
            }
            Domain::Disc => "",
        };
        w.write_record([
            r.domain.to_string(),
            r.k.to_string(),
            fmt_f64(r.lambda_at_next),
            fmt_f64(r.lambda2_at_next),
            fmt_f64(r.lebesgue),
            fmt_f64(r.lebesgue2),
            fmt_f64(r.argmax_theta),
            fmt_f64(r.argmax2_theta),
            fmt_f64(r.diff_norm),
            opt(r.sup_w),
            opt(r.beta),
            status_str(r.status).to_string(),
            conj.to_string(),
        ])?;
    }
    finish(w)
}

pub fn cmd_lebesgue(domain: Domain, kmin: usize, kmax: usize, cfg: &SearchConfig) -> CliResult<String> {
    lebesgue_csv(&lebesgue_rows(domain, kmin, kmax, cfg)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Disc,
    Interval,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "disc" => Ok(Suite::Disc),
            "interval" => Ok(Suite::Interval),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite '{other}' (expected disc, interval or all)")),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifySummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub exploratory_failed: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub outcome: SuiteOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<String>,
    pub summary: VerifySummary,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            SuiteOutcome::Pass => exit::PASS,
            SuiteOutcome::Fail => exit::BOUND_FAILURE,
            SuiteOutcome::Inconclusive => exit::INCONCLUSIVE,
        }
    }
}

pub fn cmd_verify(suite: Suite, kmax: usize, cfg: &SearchConfig, seed: u64) -> CliResult<VerifyReport> {
    if kmax < 2 {
        return Err(CliError::Usage(format!("kmax must be at least 2, got {kmax}")));
    }
    let sc = SuiteConfig { kmax, search: *cfg, seed };
    let mut suites = Vec::new();
    if matches!(suite, Suite::Disc | Suite::All) {
        suites.push(check_disc_suite(&sc)?);
    }
    if matches!(suite, Suite::Interval | Suite::All) {
        suites.push(check_interval_suite(&sc)?);
    }
    let merged = suites.iter().cloned().reduce(SuiteReport::merge).expect("at least one suite");
    let summary = VerifySummary {
        total: merged.checks.len(),
        passed: merged.checks.iter().filter(|c| c.passed()).count(),
        failed: merged.failures().len(),
        inconclusive: merged.inconclusive().len(),
        exploratory_failed: merged
            .checks
            .iter()
            .filter(|c| c.severity == Severity::Exploratory && c.status == CheckStatus::Fail)
            .count(),
    };
    Ok(VerifyReport {
        outcome: merged.outcome(),
        conjecture: merged.conjecture().map(|c| c.to_string()),
        summary,
        suites,
    })
}

pub fn cmd_gamma(mmax: u32) -> CliResult<String> {
    if !(1..=10).contains(&mmax) {
        return Err(CliError::Usage(format!("mmax must be in 1..=10, got {mmax}")));
    }
    let mut w = csv_writer();
    w.write_record(["m", "l", "gamma", "bound", "margin"])?;
    for m in 1..=mmax {
        for l in 1..=(1u64 << (m - 1)) {
            let g = gamma(m, l)?;
            let b = gamma_bound(l);
            w.write_record([m.to_string(), l.to_string(), fmt_f64(g), fmt_f64(b), fmt_f64(b - g)])?;
        }
    }
    finish(w)
}

pub fn cmd_figure(kmax: usize, cfg: &SearchConfig) -> CliResult<String> {
    let rows = figure_data(kmax, cfg)?;
    let mut w = csv_writer();
    w.write_record(["k", "disc_L", "disc_estimate", "interval_L", "interval_3k", "status"])?;
    for r in rows {
        w.write_record([
            r.k.to_string(),
            fmt_f64(r.disc_lebesgue),
            fmt_f64(r.disc_estimate),
            fmt_f64(r.interval_lebesgue),
            fmt_f64(r.interval_conjecture),
            (if r.conclusive { "converged" } else { "inconclusive" }).to_string(),
        ])?;
    }
    finish(w)
}

/// Times a command for the manifest.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

/// Human-readable one-line digest of a verification run.
pub fn verify_digest(r: &VerifyReport) -> String {
    let mut s = String::new();
    let _ = write!(
        s,
        "{:?}: {} checks, {} passed, {} failed, {} inconclusive",
        r.outcome, r.summary.total, r.summary.passed, r.summary.failed, r.summary.inconclusive
    );
    if let Some(c) = &r.conjecture {
        let _ = write!(s, "; conjecture L_R <= 3k {c}");
    }
    s
}
