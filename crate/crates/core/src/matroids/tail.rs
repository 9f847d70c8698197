use std::f64::consts::LN_2;

use serde::Serialize;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::inequalities::{check_probability, subset_expectation, subset_expectation_mc, SubsetMode};
use crate::report::{GapReport, InequalityId};

use super::binary::{matroid_rank, BinaryMatroid};
use super::graph::{connected_components, Graph};

/// `t = p^{1/(2 ln 2)}`; `t ≥ p` on `[0, 1]`.
pub fn lemma17_t(p: f64) -> f64 {
    p.powf(1.0 / (2.0 * LN_2))
}

fn check_exact(m: &BinaryMatroid, what: &'static str) -> Result<()> {
    let cap = Caps::global().exact_subsets;
    if m.n() > cap {
        return Err(Error::CapExceeded { what, n: m.n(), cap });
    }
    Ok(())
}

/// `log₂ E_{S~p} 2^{|S|−r(S)}` against `E_{T~t}(|T| − r(T))`.
pub fn lemma17_gap(m: &BinaryMatroid, p: f64, mode: &SubsetMode) -> Result<GapReport> {
    check_probability(p)?;
    let t = lemma17_t(p);
    let (lhs, rhs) = match *mode {
        SubsetMode::Exact => {
            check_exact(m, "rank-deficiency inequality")?;
            let profile = m.profile()?;
            (
                profile.expect(p, |j, r| ((j - r) as f64).exp2()).log2(),
                profile.expect(t, |j, r| (j - r) as f64),
            )
        }
        SubsetMode::MonteCarlo { samples, seed } => {
            let def = |s: crate::subset::SubsetMask| (s.len() - matroid_rank(m, s)) as f64;
            let lhs = subset_expectation_mc(m.n(), p, |s| def(s).exp2(), samples, seed)?.mean.log2();
            let rhs = subset_expectation_mc(m.n(), t, def, samples, seed.wrapping_add(1))?.mean;
            (lhs, rhs)
        }
    };
    Ok(GapReport::new(InequalityId::Lemma17, m.n(), lhs, rhs).with_param(p).with_mode(mode))
}

/// `μ(p) = E_{S~p}(|S| − r(S))`, exact.
pub fn mu(m: &BinaryMatroid, p: f64) -> Result<f64> {
    check_probability(p)?;
    check_exact(m, "mean deficiency")?;
    Ok(m.profile()?.expect(p, |j, r| (j - r) as f64))
}

/// `(p, μ(p))` over a grid.
pub fn mu_curve(m: &BinaryMatroid, grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    grid.iter().map(|&p| Ok((p, mu(m, p)?))).collect()
}

/// `k + 1` evenly spaced points on `[0, 1]`.
pub fn uniform_grid(k: usize) -> Vec<f64> {
    (0..=k).map(|i| i as f64 / k as f64).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailProbability {
    pub p: f64,
    pub t: f64,
    pub delta: f64,
    /// `μ(t) + Δ`.
    pub threshold: f64,
    /// `Pr_{S~p}{|S| − r(S) ≥ μ(t) + Δ}`, exact.
    pub probability: f64,
    /// `2^{−Δ}`.
    pub bound: f64,
}

/// Exact tail of the deficiency at `μ(t) + Δ`; the threshold is lowered by
/// `1e−12` so integer deficiencies sitting on it are counted.
pub fn tail_probability(m: &BinaryMatroid, p: f64, delta: f64) -> Result<TailProbability> {
    check_probability(p)?;
    if delta.is_nan() || delta < 0.0 {
        return Err(Error::InvalidParameter(format!("Δ must be nonnegative, got {delta}")));
    }
    let t = lemma17_t(p);
    let threshold = mu(m, t)? + delta;
    let probability = m
        .profile()?
        .expect(p, |j, r| if (j - r) as f64 >= threshold - 1e-12 { 1.0 } else { 0.0 });
    Ok(TailProbability { p, t, delta, threshold, probability, bound: (-delta).exp2() })
}

pub fn tail_bound_check(m: &BinaryMatroid, p: f64, delta: f64) -> Result<GapReport> {
    let tail = tail_probability(m, p, delta)?;
    Ok(GapReport::new(InequalityId::TailBound, m.n(), tail.probability, tail.bound).with_param(p))
}

/// `exp(−2((t−p)μ(p) + pΔ)² / (p² n))`.
pub fn bounded_diff_value(n: usize, mu_p: f64, p: f64, t: f64, delta: f64) -> Result<f64> {
    if !(p > 0.0 && p <= t && t <= 1.0) {
        return Err(Error::InvalidParameter(format!("need 0 < p ≤ t ≤ 1, got p={p}, t={t}")));
    }
    let a = (t - p) * mu_p + p * delta;
    Ok((-2.0 * a * a / (p * p * n as f64)).exp())
}

pub fn bounded_diff_tail(m: &BinaryMatroid, p: f64, t: f64, delta: f64) -> Result<f64> {
    if p <= 0.0 {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    bounded_diff_value(m.n(), mu(m, p)?, p, t, delta)
}

/// `log₂ E_{S~p} 2^{|S|+c(S)}` against `t|E| + E_{T~t} c(T)`, through component
/// counts rather than matrix ranks.
pub fn graph_inequality_gap(g: &Graph, p: f64, mode: &SubsetMode) -> Result<GapReport> {
    check_probability(p)?;
    let t = lemma17_t(p);
    let e = g.edge_count();
    let cap = Caps::global().exact_subsets;
    let mode_t = match *mode {
        SubsetMode::MonteCarlo { samples, seed } => SubsetMode::MonteCarlo { samples, seed: seed.wrapping_add(1) },
        SubsetMode::Exact => SubsetMode::Exact,
    };
    let lhs = subset_expectation(e, p, |s| ((s.len() + connected_components(g, s)) as f64).exp2(), mode, cap)?
        .mean
        .log2();
    let rhs = t * e as f64 + subset_expectation(e, t, |s| connected_components(g, s) as f64, &mode_t, cap)?.mean;
    Ok(GapReport::new(InequalityId::GraphComponents, e, lhs, rhs).with_param(p).with_mode(mode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroids::graphic_matroid;

    fn rep2() -> BinaryMatroid {
        BinaryMatroid::from_rows(2, vec![0b11]).unwrap()
    }

    #[test]
    fn lemma17_examples() {
        let free = BinaryMatroid::free(6).unwrap();
        let r = lemma17_gap(&free, 0.4, &SubsetMode::Exact).unwrap();
        assert!(r.lhs.abs() < 1e-14 && r.rhs == 0.0 && r.equality);
        let r = lemma17_gap(&rep2(), 0.0, &SubsetMode::Exact).unwrap();
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
        let r = lemma17_gap(&rep2(), 0.5, &SubsetMode::Exact).unwrap();
        assert!((r.lhs - 1.25f64.log2()).abs() < 1e-15);
        let t = lemma17_t(0.5);
        assert!((r.rhs - t * t).abs() < 1e-15);
        assert!(r.holds(1e-9));
    }

    #[test]
    fn lemma17_mc_close_to_exact() {
        let m = graphic_matroid(&Graph::complete(4).unwrap());
        let exact = lemma17_gap(&m, 0.5, &SubsetMode::Exact).unwrap();
        let mc = lemma17_gap(&m, 0.5, &SubsetMode::MonteCarlo { samples: 200_000, seed: 3 }).unwrap();
        assert!((exact.lhs - mc.lhs).abs() < 0.02 && (exact.rhs - mc.rhs).abs() < 0.02);
    }

    #[test]
    fn mu_examples() {
        let free = BinaryMatroid::free(4).unwrap();
        let lp = BinaryMatroid::from_rows(1, vec![0]).unwrap();
        for p in uniform_grid(10) {
            assert_eq!(mu(&free, p).unwrap(), 0.0);
            assert!((mu(&lp, p).unwrap() - p).abs() < 1e-15);
            assert!((mu(&rep2(), p).unwrap() - p * p).abs() < 1e-15);
        }
    }

    #[test]
    fn tail_examples() {
        let free = BinaryMatroid::free(5).unwrap();
        assert_eq!(tail_probability(&free, 0.5, 0.5).unwrap().probability, 0.0);
        assert!(tail_probability(&free, 0.5, 0.0).unwrap().probability <= 1.0);
        let k4 = graphic_matroid(&Graph::complete(4).unwrap());
        for delta in [0.5, 1.0, 2.0] {
            let r = tail_bound_check(&k4, 0.5, delta).unwrap();
            assert!(r.lhs <= r.rhs + 1e-12);
        }
        assert!(tail_probability(&k4, 0.5, -1.0).is_err());
    }

    #[test]
    fn bounded_diff_examples() {
        let free = BinaryMatroid::free(8).unwrap();
        assert_eq!(bounded_diff_tail(&free, 0.3, 0.3, 0.0).unwrap(), 1.0);
        let v = bounded_diff_tail(&free, 0.3, 0.6, 2.0).unwrap();
        assert!((v - (-2.0 * 4.0 / 8.0f64).exp()).abs() < 1e-15);
        let k4 = graphic_matroid(&Graph::complete(4).unwrap());
        let v = bounded_diff_tail(&k4, 0.3, 0.5, 1.0).unwrap();
        let mu3 = mu(&k4, 0.3).unwrap();
        let a = 0.2 * mu3 + 0.3;
        assert!((v - (-2.0 * a * a / (0.09 * 6.0)).exp()).abs() < 1e-15);
        assert!(bounded_diff_tail(&k4, 0.0, 0.5, 1.0).is_err());
        assert!(bounded_diff_tail(&k4, 0.5, 0.3, 1.0).is_err());
    }

    #[test]
    fn graph_gap_examples() {
        let empty = Graph::new(5, vec![]).unwrap();
        let r = graph_inequality_gap(&empty, 0.3, &SubsetMode::Exact).unwrap();
        assert_eq!((r.lhs, r.rhs), (5.0, 5.0));
        let edge = Graph::new(2, vec![(0, 1)]).unwrap();
        for p in [0.1, 0.5, 0.9] {
            let r = graph_inequality_gap(&edge, p, &SubsetMode::Exact).unwrap();
            let t = lemma17_t(p);
            // S = ∅ gives 2^2, S = {e} gives 2^{1+1}.
            assert!((r.lhs - 2.0).abs() < 1e-15);
            assert!((r.rhs - (t + 2.0 - t)).abs() < 1e-15);
        }
    }

    #[test]
    fn graph_gap_matches_shifted_lemma17() {
        let g = Graph::parse("4 7\n0 1\n1 2\n2 3\n3 0\n0 2\n1 1\n1 2\n").unwrap();
        let m = graphic_matroid(&g);
        for p in [0.2, 0.5, 0.8] {
            let a = graph_inequality_gap(&g, p, &SubsetMode::Exact).unwrap();
            let b = lemma17_gap(&m, p, &SubsetMode::Exact).unwrap();
            assert!((a.lhs - b.lhs - 4.0).abs() < 1e-12);
            assert!((a.rhs - b.rhs - 4.0).abs() < 1e-12);
        }
    }
}
