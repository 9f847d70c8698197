//! Command-line front end. `main.rs` only parses arguments and maps the
//! outcome to an exit status.

mod code;
mod matroid;
mod output;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::inequalities::SubsetMode;

pub use code::{CodeArgs, CompareArgs};
pub use matroid::MatroidArgs;
pub use output::{Format, Report};
pub use verify::{Target, VerifyArgs};

#[derive(Debug, Parser)]
#[command(name = "cubenoise", version, about = "Noise-operator norm inequalities on the boolean cube, code weight bounds and matroid tail bounds")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a cube inequality over seeded random and structured functions.
    Verify(VerifyArgs),
    /// Weight distributions, rank deficiency, F(λ, q) and weight bounds for a linear code.
    Code(CodeArgs),
    /// Rank-deficiency inequality, Tutte identities, tail bounds and μ for a binary or graphic matroid.
    Matroid(MatroidArgs),
    /// Exponents of two weight bounds for capacity-achieving codes, side by side.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Mc,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Root seed; every trial derives its own stream from it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// A gap below −tolerance is a violation.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = parse_tolerance)]
    pub tolerance: f64,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    /// Samples per Monte Carlo expectation.
    #[arg(long, global = true, default_value_t = 20_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

/// Validated run settings.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub tolerance: f64,
    pub mode: ModeArg,
    pub samples: u64,
    pub caps: Caps,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl From<&RunArgs> for RunConfig {
    fn from(a: &RunArgs) -> Self {
        RunConfig {
            seed: a.seed,
            tolerance: a.tolerance,
            mode: a.mode,
            samples: a.samples,
            caps: *Caps::global(),
            format: a.format,
            output: a.output.clone(),
        }
    }
}

impl RunConfig {
    /// Subset mode for task `task`; Monte Carlo seeds are mixed from the root seed.
    pub fn subset_mode(&self, task: u64) -> SubsetMode {
        match self.mode {
            ModeArg::Exact => SubsetMode::Exact,
            ModeArg::Mc => SubsetMode::MonteCarlo { samples: self.samples, seed: mix_seed(self.seed, task) },
        }
    }
}

/// SplitMix64 finalizer over `seed + task`.
pub fn mix_seed(seed: u64, task: u64) -> u64 {
    let mut z = seed.wrapping_add(task.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Result of a command: the rendered report and every violation found.
#[derive(Debug)]
pub struct Outcome {
    pub report: Vec<u8>,
    pub violations: Vec<String>,
}

/// Runs the parsed command and writes the report to `--output` if given.
/// Input problems come back as `Err`; failed inequalities as violations.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let config = RunConfig::from(&cli.run);
    let mut report = Report::new(config.format);
    let violations = match &cli.command {
        Command::Verify(args) => verify::run(&config, args, &mut report)?,
        Command::Code(args) => code::run(&config, args, &mut report)?,
        Command::Matroid(args) => matroid::run(&config, args, &mut report)?,
        Command::Compare(args) => code::run_compare(args, &mut report)?,
    };
    let bytes = report.finish();
    if let Some(path) = &config.output {
        fs::write(path, &bytes).map_err(|e| Error::Io { path: path.clone(), msg: e.to_string() })?;
    }
    Ok(Outcome { report: bytes, violations })
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io { path: path.to_path_buf(), msg: e.to_string() })
}

fn parse_tolerance(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("tolerance must be positive, got {s}"))
    }
}

/// A float in `[0, 1]`.
pub(crate) fn parse_unit(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{s} is outside [0, 1]"))
    }
}

/// A float ≥ 1, with `inf` allowed.
pub(crate) fn parse_q(s: &str) -> std::result::Result<f64, String> {
    let s = s.trim();
    let v = if s.eq_ignore_ascii_case("inf") { f64::INFINITY } else { s.parse().map_err(|e| format!("{e}"))? };
    if v >= 1.0 {
        Ok(v)
    } else {
        Err(format!("exponent must be at least 1, got {s}"))
    }
}

pub(crate) fn parse_nonneg(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("expected a nonnegative number, got {s}"))
    }
}

pub(crate) fn or_default(values: &[f64], default: &[f64]) -> Vec<f64> {
    if values.is_empty() {
        default.to_vec()
    } else {
        values.to_vec()
    }
}

/// Records the first-found description of a failed row.
pub(crate) fn violation<T: serde::Serialize>(table: &str, row: &T) -> String {
    format!("{table}: {}", serde_json::to_string(row).unwrap_or_default())
}
