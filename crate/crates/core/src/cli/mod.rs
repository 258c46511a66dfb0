//! Command-line front end: `verify` runs claim suites, `eval` prints exact
//! objects, `claims` lists the registry.

mod config;

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use config::{ClaimSelection, ConfigError, OutputFormat, Overrides, RunConfig};

use crate::qstruct::{cyclotomic, q_binomial, q_delannoy};
use crate::sequences::{d_poly, s_poly};
use crate::verifier::{run_suite, ClaimId, Report, Summary};

/// Environment variable naming the directory for reports when `--output` is absent.
pub const OUT_DIR_ENV: &str = "DELANNOY_LAB_OUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CONJECTURE_FAILURE: i32 = 2;
pub const EXIT_THEOREM_FAILURE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "delannoy-lab",
    version,
    about = "Exact checks of Delannoy-type identities, q-analogues and congruences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run claim checks over parameter grids.
    Verify(VerifyArgs),
    /// Print an exact polynomial.
    Eval(EvalArgs),
    /// List claim identifiers.
    Claims,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Comma-separated claim ids, or `all`.
    #[arg(long)]
    claims: Option<String>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    m_max: Option<u32>,
    #[arg(long)]
    r_max: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    x_min: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    x_max: Option<i64>,
    /// Comma-separated odd primes.
    #[arg(long)]
    primes: Option<String>,
    /// `text` or `jsonl`.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long)]
    parallelism: Option<usize>,
    /// Omit timings so output is byte-stable.
    #[arg(long)]
    no_timing: bool,
    /// Seed for sampled residues.
    #[arg(long)]
    seed: Option<u64>,
    /// Sampled residues per prime for the mod p^4 check.
    #[arg(long)]
    thm51_samples: Option<usize>,
    /// Flat `key = value` file; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl VerifyArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            claims: self.claims.clone(),
            n_max: self.n_max,
            m_max: self.m_max,
            r_max: self.r_max,
            x_min: self.x_min,
            x_max: self.x_max,
            primes: self.primes.clone(),
            format: self.format.clone(),
            output: self.output.clone(),
            parallelism: self.parallelism,
            no_timing: self.no_timing.then_some(true),
            seed: self.seed,
            thm51_samples: self.thm51_samples,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Expr {
    /// d_n(x)
    D,
    /// s_n(x)
    S,
    /// D_q(m,n)
    #[value(name = "Dq", alias = "dq")]
    Dq,
    /// Gaussian binomial [n,k]
    Qbinom,
    /// Phi_d(q)
    Cyclotomic,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(value_enum)]
    expr: Expr,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
}

fn require<T>(v: Option<T>, flag: &str, err: &mut dyn Write) -> Result<T, i32> {
    v.ok_or_else(|| {
        let _ = writeln!(err, "error: `--{flag}` is required for this expression");
        EXIT_USAGE
    })
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), i32> {
    let text = match args.expr {
        Expr::D => d_poly(require(args.n, "n", err)?).to_string(),
        Expr::S => s_poly(require(args.n, "n", err)?).to_string(),
        Expr::Dq => {
            let (m, n) = (require(args.m, "m", err)?, require(args.n, "n", err)?);
            q_delannoy(m, n).dq.to_string()
        }
        Expr::Qbinom => {
            let (n, k) = (require(args.n, "n", err)?, require(args.k, "k", err)?);
            q_binomial(n.into(), k).to_string()
        }
        Expr::Cyclotomic => {
            let d = require(args.d, "d", err)?;
            if d == 0 {
                let _ = writeln!(err, "error: `--d` must be at least 1");
                return Err(EXIT_USAGE);
            }
            cyclotomic(d).to_string()
        }
    };
    writeln!(out, "{text}").map_err(|_| EXIT_USAGE)
}

fn write_reports(reports: &[Report], cfg: &RunConfig, w: &mut dyn Write) -> io::Result<()> {
    for r in reports {
        let line = match cfg.format {
            OutputFormat::Text => r.to_text_line(cfg.timing),
            OutputFormat::Jsonl => r.to_json_line(cfg.timing),
        };
        writeln!(w, "{line}")?;
    }
    w.flush()
}

fn output_path(cfg: &RunConfig) -> Option<PathBuf> {
    cfg.output.clone().or_else(|| {
        std::env::var_os(OUT_DIR_ENV).map(|dir| {
            let ext = match cfg.format {
                OutputFormat::Text => "txt",
                OutputFormat::Jsonl => "jsonl",
            };
            PathBuf::from(dir).join(format!("report.{ext}"))
        })
    })
}

/// Exit status for a finished run: theorem failures dominate conjecture failures.
pub fn exit_code(summary: &Summary) -> i32 {
    if summary.theorem_failures > 0 {
        EXIT_THEOREM_FAILURE
    } else if summary.conjecture_failures > 0 {
        EXIT_CONJECTURE_FAILURE
    } else {
        EXIT_OK
    }
}

/// Runs a resolved configuration and writes its reports.
pub fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let reports = run_suite(&cfg.claims.claims(), &cfg.bounds, cfg.parallelism);
    let written = match output_path(cfg) {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                if let Err(e) = fs::create_dir_all(dir) {
                    let _ = writeln!(err, "error: cannot create {}: {e}", dir.display());
                    return EXIT_USAGE;
                }
            }
            File::create(&path)
                .and_then(|f| write_reports(&reports, cfg, &mut BufWriter::new(f)))
                .map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => write_reports(&reports, cfg, out).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    let summary = Summary::of(&reports);
    let _ = writeln!(err, "{summary}");
    exit_code(&summary)
}

fn resolve(args: &VerifyArgs) -> Result<RunConfig, ConfigError> {
    let file = match &args.config {
        Some(p) => Overrides::from_file(p)?,
        None => Overrides::default(),
    };
    RunConfig::resolve(args.overrides().over(file))
}

/// Parses `args` (program name first) and runs the command. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match cli.command {
        Command::Verify(args) => match resolve(&args) {
            Ok(cfg) => cmd_verify(&cfg, out, err),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                let _ = writeln!(err, "usage: delannoy-lab verify [--claims ID[,ID...]|all] [--n-max N] [--m-max N] [--r-max N] [--x-min X] [--x-max X] [--primes P[,P...]] [--format text|jsonl] [--output PATH] [--parallelism N] [--no-timing] [--config FILE]");
                if matches!(e, ConfigError::UnknownClaim(_)) {
                    let names: Vec<&str> = ClaimId::ALL.iter().map(|c| c.name()).collect();
                    let _ = writeln!(err, "known claims: {}", names.join(", "));
                }
                EXIT_USAGE
            }
        },
        Command::Eval(args) => match cmd_eval(&args, out, err) {
            Ok(()) => EXIT_OK,
            Err(code) => code,
        },
        Command::Claims => {
            for c in ClaimId::ALL {
                let kind = if c.is_conjecture() {
                    "conjecture"
                } else {
                    "theorem"
                };
                let _ = writeln!(out, "{:<17} {:<10} {}", c.name(), kind, c.description());
            }
            EXIT_OK
        }
    }
}
