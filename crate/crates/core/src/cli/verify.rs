use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::cube::CubeFunction;
use crate::error::Result;
use crate::fuzz::{random_function, random_nonconstant_function, structured_family, trial_rng};
use crate::inequalities::{
    derivative_check, hypercontractive_gap, log_sobolev_gap, main_inequality_gap, noisy_entropy_gap,
    two_point_gap, DerivativeCheck,
};
use crate::report::{GapReport, ModeTag};

use super::{or_default, parse_q, violation, Report, RunConfig};

pub const DEFAULT_Q: [f64; 7] = [1.1, 1.5, 2.0, 2.5, 3.0, 4.0, 8.0];

/// `0, 0.05, …, 0.5`.
pub fn default_eps() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 20.0).collect()
}

/// 50 log-spaced points on `[1, 1000]`, then `∞`.
pub fn default_two_point_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (0..50).map(|i| 10f64.powf(3.0 * i as f64 / 49.0)).collect();
    grid[0] = 1.0;
    grid.push(f64::INFINITY);
    grid
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Main,
    Entropy,
    Logsobolev,
    Twopoint,
    Derivative,
    Hypercontractive,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    /// Cube dimension.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Number of random functions, on top of the structured ones.
    #[arg(long, default_value_t = 20)]
    pub fuzz: u64,
    /// Exponent grid, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_q)]
    pub q: Vec<f64>,
    /// Noise grid, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_eps)]
    pub eps: Vec<f64>,
    /// Skip the structured family.
    #[arg(long)]
    pub no_structured: bool,
}

fn parse_eps(s: &str) -> std::result::Result<f64, String> {
    let v = super::parse_unit(s)?;
    if v <= 0.5 {
        Ok(v)
    } else {
        Err(format!("noise rate must lie in [0, 1/2], got {s}"))
    }
}

#[derive(Debug, Serialize)]
struct DerivativeRow {
    trial: u64,
    q: f64,
    f_formula: f64,
    f_difference: f64,
    f_relative_error: f64,
    g_formula: f64,
    g_difference: f64,
    g_relative_error: f64,
    strict: bool,
}

impl DerivativeRow {
    fn new(trial: u64, c: &DerivativeCheck) -> Self {
        DerivativeRow {
            trial,
            q: c.q,
            f_formula: c.f_formula,
            f_difference: c.f_difference,
            f_relative_error: c.f_relative_error(),
            g_formula: c.g_formula,
            g_difference: c.g_difference,
            g_relative_error: c.g_relative_error(),
            strict: c.strict(),
        }
    }
}

/// Relative agreement required between closed-form and finite-difference derivatives.
pub const DERIVATIVE_TOL: f64 = 1e-4;

fn inputs(config: &RunConfig, args: &VerifyArgs, nonconstant: bool) -> Result<Vec<CubeFunction>> {
    let mut fs = Vec::new();
    if !args.no_structured && !nonconstant {
        fs.extend(structured_family(args.n)?.into_iter().map(|s| s.f));
    }
    for trial in 0..args.fuzz {
        let mut rng = trial_rng(config.seed, trial);
        fs.push(if nonconstant {
            random_nonconstant_function(args.n, &mut rng)?
        } else {
            random_function(args.n, &mut rng)?
        });
    }
    Ok(fs)
}

fn first_violation(rows: &[GapReport], tol: f64, table: &str) -> Option<String> {
    // Monte Carlo rows carry sampling error and are reported, not asserted.
    rows.iter().find(|r| r.mode == ModeTag::Exact && !r.holds(tol)).map(|r| violation(table, r))
}

pub fn run(config: &RunConfig, args: &VerifyArgs, report: &mut Report) -> Result<Vec<String>> {
    let qs = or_default(&args.q, &DEFAULT_Q);
    let eps = or_default(&args.eps, &default_eps());
    let table = format!("verify-{:?}", args.target).to_lowercase();
    let rows: Vec<GapReport> = match args.target {
        Target::Twopoint => {
            let grid = default_two_point_grid();
            let rows: Result<Vec<Vec<GapReport>>> =
                qs.par_iter().map(|&q| grid.iter().map(|&t| two_point_gap(t, q)).collect()).collect();
            rows?.into_iter().flatten().collect()
        }
        Target::Derivative => {
            let fs = inputs(config, args, true)?;
            let checks: Result<Vec<Vec<DerivativeCheck>>> = fs
                .par_iter()
                .map(|f| qs.iter().filter(|q| q.is_finite()).map(|&q| derivative_check(f, q, config.caps.exact_subsets_costly)).collect())
                .collect();
            let checks = checks?;
            let detail: Vec<DerivativeRow> = checks
                .iter()
                .enumerate()
                .flat_map(|(i, cs)| cs.iter().map(move |c| DerivativeRow::new(i as u64, c)))
                .collect();
            report.table(&table, &detail)?;
            let mut violations: Vec<String> = detail
                .iter()
                .filter(|d| !d.strict || d.f_relative_error > DERIVATIVE_TOL || d.g_relative_error > DERIVATIVE_TOL)
                .map(|d| violation(&table, d))
                .take(1)
                .collect();
            let gaps: Vec<GapReport> = checks.iter().flatten().map(|c| c.report()).collect();
            report.table("verify-derivative-gaps", &gaps)?;
            violations.extend(first_violation(&gaps, config.tolerance, "verify-derivative-gaps"));
            return Ok(violations);
        }
        _ => {
            let fs = inputs(config, args, false)?;
            let target = args.target;
            let rows: Result<Vec<Vec<GapReport>>> = fs
                .par_iter()
                .enumerate()
                .map(|(i, f)| {
                    let mode = config.subset_mode(i as u64);
                    let mut out = Vec::new();
                    match target {
                        Target::Main => {
                            for &q in &qs {
                                for &e in &eps {
                                    out.push(main_inequality_gap(f, q, e, &mode)?);
                                }
                            }
                        }
                        Target::Entropy => {
                            for &e in &eps {
                                out.push(noisy_entropy_gap(f, e, &mode)?);
                            }
                        }
                        Target::Hypercontractive => {
                            for &q in qs.iter().filter(|q| q.is_finite()) {
                                for &e in &eps {
                                    out.push(hypercontractive_gap(f, q, e)?);
                                }
                            }
                        }
                        Target::Logsobolev => {
                            for &q in qs.iter().filter(|q| q.is_finite()) {
                                out.push(log_sobolev_gap(f, q)?);
                            }
                        }
                        Target::Twopoint | Target::Derivative => unreachable!(),
                    }
                    Ok(out)
                })
                .collect();
            rows?.into_iter().flatten().collect()
        }
    };
    report.table(&table, &rows)?;
    Ok(first_violation(&rows, config.tolerance, &table).into_iter().collect())
}
