use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lejakit::{Domain, SearchConfig};
use lejakit_cli::{
    cmd_figure, cmd_gamma, cmd_gen, cmd_lebesgue, cmd_verify, exit, timed, verify_digest, CliError, CliResult,
    Format, RunManifest, Suite,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "lejakit", version, about = "Leja sequences, Lebesgue constants and bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SearchFlags {
    /// Grid points per node in sup-searches.
    #[arg(long, default_value_t = 64)]
    grid_mult: usize,
    /// Number of grid maxima refined by golden section.
    #[arg(long, default_value_t = 16)]
    refine_brackets: usize,
    /// Relative tolerance accepted for refined suprema.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Seed for randomly sampled points.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SearchFlags {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            grid_mult: self.grid_mult,
            refine_brackets: self.refine_brackets,
            tol_rel: self.tol,
            ..SearchConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the first k nodes of a sequence.
    Gen {
        domain: Domain,
        k: usize,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lebesgue report rows for kmin..=kmax.
    Lebesgue {
        domain: Domain,
        #[arg(value_name = "KMIN")]
        kmin_pos: Option<usize>,
        #[arg(value_name = "KMAX")]
        kmax_pos: Option<usize>,
        #[arg(long, conflicts_with = "kmin_pos")]
        kmin: Option<usize>,
        #[arg(long, conflicts_with = "kmax_pos")]
        kmax: Option<usize>,
        #[command(flatten)]
        search: SearchFlags,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a bound suite; exit 0 pass, 1 failure, 3 inconclusive.
    Verify {
        suite: Suite,
        #[arg(value_name = "KMAX")]
        kmax_pos: Option<usize>,
        #[arg(long, conflicts_with = "kmax_pos")]
        kmax: Option<usize>,
        #[command(flatten)]
        search: SearchFlags,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Table of gamma_{m,l} against its bound.
    Gamma {
        mmax: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lebesgue constants of both sequences for k = 1..=kmax.
    Figure {
        kmax: usize,
        #[command(flatten)]
        search: SearchFlags,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(body: &str, out: Option<&PathBuf>, manifest: &RunManifest) -> CliResult<()> {
    match out {
        Some(path) => {
            std::fs::write(path, body)?;
            std::fs::write(RunManifest::path_for(path), manifest.to_json() + "\n")?;
        }
        None => {
            print!("{body}");
            eprintln!("{}", serde_json::to_string(manifest).expect("serializable"));
        }
    }
    Ok(())
}

fn required(pos: Option<usize>, flag: Option<usize>, name: &str) -> CliResult<usize> {
    pos.or(flag).ok_or_else(|| CliError::Usage(format!("missing {name}")))
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Gen { domain, k, format, out } => {
            let (body, t) = timed(|| cmd_gen(domain, k, format));
            let mut m = RunManifest::new("gen", json!({"domain": domain, "k": k}), SearchConfig::default(), 0);
            m.wall_time_s = t;
            emit(&body?, out.as_ref(), &m)?;
            Ok(exit::PASS)
        }
        Command::Lebesgue { domain, kmin_pos, kmax_pos, kmin, kmax, search, out } => {
            let kmin = required(kmin_pos, kmin, "kmin")?;
            let kmax = required(kmax_pos, kmax, "kmax")?;
            let cfg = search.config();
            let (body, t) = timed(|| cmd_lebesgue(domain, kmin, kmax, &cfg));
            let body = body?;
            let mut m = RunManifest::new(
                "lebesgue",
                json!({"domain": domain, "kmin": kmin, "kmax": kmax}),
                cfg,
                search.seed,
            );
            m.wall_time_s = t;
            emit(&body, out.as_ref(), &m)?;
            Ok(if body.contains(",inconclusive,") { exit::INCONCLUSIVE } else { exit::PASS })
        }
        Command::Verify { suite, kmax_pos, kmax, search, out } => {
            let kmax = required(kmax_pos, kmax, "kmax")?;
            let cfg = search.config();
            let (report, t) = timed(|| cmd_verify(suite, kmax, &cfg, search.seed));
            let report = report?;
            let suite_name = match suite {
                Suite::Disc => "disc",
                Suite::Interval => "interval",
                Suite::All => "all",
            };
            let mut m = RunManifest::new("verify", json!({"suite": suite_name, "kmax": kmax}), cfg, search.seed);
            m.wall_time_s = t;
            let body = serde_json::to_string_pretty(&json!({"manifest": m, "report": report})).expect("serializable");
            emit(&(body + "\n"), out.as_ref(), &m)?;
            eprintln!("{}", verify_digest(&report));
            Ok(report.exit_code())
        }
        Command::Gamma { mmax, out } => {
            let (body, t) = timed(|| cmd_gamma(mmax));
            let mut m = RunManifest::new("gamma", json!({"mmax": mmax}), SearchConfig::default(), 0);
            m.wall_time_s = t;
            emit(&body?, out.as_ref(), &m)?;
            Ok(exit::PASS)
        }
        Command::Figure { kmax, search, out } => {
            let cfg = search.config();
            let (body, t) = timed(|| cmd_figure(kmax, &cfg));
            let mut m = RunManifest::new("figure", json!({"kmax": kmax}), cfg, search.seed);
            m.wall_time_s = t;
            emit(&body?, out.as_ref(), &m)?;
            Ok(exit::PASS)
        }
    }
}

fn init_threads() -> CliResult<()> {
    if let Ok(v) = std::env::var("LEJAKIT_THREADS") {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("LEJAKIT_THREADS must be a positive integer, got '{v}'")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { exit::PASS as u8 });
        }
    };
    let code = init_threads().and_then(|_| run(cli)).unwrap_or_else(|e| {
        eprintln!("lejakit: {e}");
        exit::USAGE
    });
    ExitCode::from(code as u8)
}
