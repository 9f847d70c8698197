use std::path::PathBuf;

use clap::{ArgGroup, Args};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::matroids::{
    bounded_diff_value, graph_inequality_gap, graphic_matroid, lemma17_gap, mu, mu_curve, tail_probability,
    tutte_identity_check, tutte_polynomial, uniform_grid, BinaryMatroid, Graph,
};
use crate::report::{serialize_opt_float, GapReport};

use super::{or_default, parse_nonneg, parse_unit, read_file, violation, ModeArg, Report, RunConfig};

pub const DEFAULT_P: [f64; 3] = [0.2, 0.5, 0.8];
pub const DEFAULT_DELTA: [f64; 5] = [0.0, 0.5, 1.0, 2.0, 4.0];
/// Slack allowed on tail probabilities before a row counts as a violation.
pub const TAIL_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["file", "graph"])))]
pub struct MatroidArgs {
    /// Matrix file in the code generator format; columns form the ground set.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Graph file: `V E`, then E lines `u v`.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Probability grid, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_unit)]
    pub p: Vec<f64>,
    /// Tail offsets, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_nonneg)]
    pub delta: Vec<f64>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
struct TutteRow {
    p: f64,
    t: f64,
    primal_tutte: f64,
    primal_direct: f64,
    deficiency_tutte: f64,
    deficiency_direct: f64,
    max_residual: f64,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
struct CoeffRow {
    i: usize,
    j: usize,
    coeff: String,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
struct TailRow {
    p: f64,
    t: f64,
    delta: f64,
    threshold: f64,
    probability: f64,
    bound: f64,
    holds: bool,
    /// Comparator at `(p, t)`; reported only.
    #[serde(serialize_with = "serialize_opt_float")]
    bounded_diff: Option<f64>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
struct MuRow {
    p: f64,
    mu: f64,
}

pub fn run(config: &RunConfig, args: &MatroidArgs, report: &mut Report) -> Result<Vec<String>> {
    let graph = match &args.graph {
        Some(path) => Some(Graph::parse(&read_file(path)?)?),
        None => None,
    };
    let m = match (&graph, &args.file) {
        (Some(g), _) => graphic_matroid(g),
        (None, Some(path)) => BinaryMatroid::parse(&read_file(path)?)?,
        (None, None) => unreachable!("clap requires a source"),
    };
    let ps = or_default(&args.p, &DEFAULT_P);
    let deltas = or_default(&args.delta, &DEFAULT_DELTA);
    let tol = config.tolerance;
    let exact = config.mode == ModeArg::Exact;
    let enumerable = m.n() <= config.caps.exact_subsets;
    if exact && !enumerable {
        return Err(crate::Error::CapExceeded { what: "exact subset sums (use --mode mc)", n: m.n(), cap: config.caps.exact_subsets });
    }
    let mut violations = Vec::new();

    let lemma17: Vec<GapReport> = ps
        .par_iter()
        .enumerate()
        .map(|(i, &p)| lemma17_gap(&m, p, &config.subset_mode(i as u64)))
        .collect::<Result<_>>()?;
    report.table("lemma17", &lemma17)?;
    if exact {
        violations.extend(lemma17.iter().find(|r| !r.holds(tol)).map(|r| violation("lemma17", r)));
    }

    if let Some(g) = &graph {
        let rows: Vec<GapReport> = ps
            .par_iter()
            .enumerate()
            .map(|(i, &p)| graph_inequality_gap(g, p, &config.subset_mode(i as u64)))
            .collect::<Result<_>>()?;
        report.table("graph", &rows)?;
        if exact {
            violations.extend(rows.iter().find(|r| !r.holds(tol)).map(|r| violation("graph", r)));
        }
    }

    if !enumerable {
        return Ok(violations);
    }

    if m.n() <= config.caps.tutte {
        let poly = tutte_polynomial(&m)?;
        let coeffs: Vec<CoeffRow> = poly
            .coeffs()
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(j, &c)| CoeffRow { i, j, coeff: c.to_string() })
            })
            .collect();
        report.table("tutte-coefficients", &coeffs)?;
    }

    let tutte: Vec<TutteRow> = ps
        .iter()
        .filter(|&&p| p > 0.0 && p < 1.0)
        .map(|&p| {
            let c = tutte_identity_check(&m, p)?;
            Ok(TutteRow {
                p,
                t: c.t,
                primal_tutte: c.primal_tutte,
                primal_direct: c.primal_direct,
                deficiency_tutte: c.deficiency_tutte,
                deficiency_direct: c.deficiency_direct,
                max_residual: c.max_residual(),
            })
        })
        .collect::<Result<_>>()?;
    report.table("tutte", &tutte)?;
    violations.extend(tutte.iter().find(|r| r.max_residual > tol).map(|r| violation("tutte", r)));

    let mut tail = Vec::new();
    for &p in &ps {
        let mu_p = mu(&m, p)?;
        for &delta in &deltas {
            let tp = tail_probability(&m, p, delta)?;
            tail.push(TailRow {
                p,
                t: tp.t,
                delta,
                threshold: tp.threshold,
                probability: tp.probability,
                bound: tp.bound,
                holds: tp.probability <= tp.bound + TAIL_SLACK,
                bounded_diff: bounded_diff_value(m.n(), mu_p, p, tp.t, delta).ok(),
            });
        }
    }
    report.table("tail", &tail)?;
    violations.extend(tail.iter().find(|r| !r.holds).map(|r| violation("tail", r)));

    let curve: Vec<MuRow> = mu_curve(&m, &uniform_grid(100))?.into_iter().map(|(p, mu)| MuRow { p, mu }).collect();
    report.table("mu", &curve)?;
    if let Some(bad) = mu_curve_violation(&curve) {
        violations.push(violation("mu", bad));
    }

    Ok(violations)
}

/// First point where `μ(0) ≠ 0`, a first difference drops below `−1e−12`, or
/// a second difference below `−1e−9`.
fn mu_curve_violation(curve: &[MuRow]) -> Option<&MuRow> {
    if curve.first().is_some_and(|r| r.p == 0.0 && r.mu != 0.0) {
        return curve.first();
    }
    for w in curve.windows(2) {
        if w[1].mu - w[0].mu < -1e-12 {
            return Some(&w[1]);
        }
    }
    curve.windows(3).find(|w| w[2].mu - 2.0 * w[1].mu + w[0].mu < -1e-9).map(|w| &w[1])
}
