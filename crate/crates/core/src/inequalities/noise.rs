//! Verifiers for the noise-operator inequalities on general nonnegative functions.

use crate::config::Caps;
use crate::cube::{conditional_expectation, entropy, ln_norm, lq_norm, noise_operator, CubeFunction};
use crate::error::{Error, Result};
use crate::report::{GapReport, InequalityId};
use crate::subset::SubsetMask;

use super::exponent::RExponent;
use super::subsets::{subset_expectation, SubsetMode};

fn check_eps(eps: f64) -> Result<()> {
    if !(0.0..=0.5).contains(&eps) {
        return Err(Error::NoiseOutOfRange(eps));
    }
    Ok(())
}

/// `ln ‖E(f|T)‖_q`.
pub fn ln_conditional_norm(f: &CubeFunction, t: SubsetMask, q: f64) -> f64 {
    let cond = conditional_expectation(f, t).expect("mask within [n]");
    ln_norm(&cond, q)
}

/// `ln ‖E(f|T)‖_q` for every `T ⊆ [n]`, indexed by mask.
pub fn ln_conditional_norm_table(f: &CubeFunction, q: f64, cap: usize) -> Result<Vec<f64>> {
    if f.n() > cap {
        return Err(Error::CapExceeded { what: "conditional norm table", n: f.n(), cap });
    }
    Ok(SubsetMask::all(f.n()).map(|t| ln_conditional_norm(f, t, q)).collect())
}

/// Checks `ln ‖f_ε‖_q ≤ E_{T~λ} ln ‖E(f|T)‖_q` with `λ = (1-2ε)^{r(q)}`, natural logs.
pub fn main_inequality_gap(f: &CubeFunction, q: f64, eps: f64, mode: &SubsetMode) -> Result<GapReport> {
    f.check_nonnegative()?;
    let exponent = RExponent::new(q)?;
    check_eps(eps)?;
    let n = f.n();
    let report = |lhs, rhs| Ok(GapReport::new(InequalityId::Main, n, lhs, rhs).with_q(q).with_param(eps).with_mode(mode));

    if eps == 0.5 {
        // λ = 0: both sides are ln E f.
        let both = f.mean().ln();
        return report(both, both);
    }
    let lhs = ln_norm(&noise_operator(f, eps)?, q);
    if eps == 0.0 {
        return report(lhs, lhs);
    }
    let lambda = exponent.lambda(eps)?;
    let cap = Caps::global().exact_subsets_costly;
    let rhs = subset_expectation(n, lambda, |t| ln_conditional_norm(f, t, q), mode, cap)?.mean;
    report(lhs, rhs)
}

/// Checks `Ent(f_ε) ≤ E_{T~(1-2ε)²} Ent(E(f|T))`, entropies in bits.
pub fn noisy_entropy_gap(f: &CubeFunction, eps: f64, mode: &SubsetMode) -> Result<GapReport> {
    f.check_nonnegative()?;
    check_eps(eps)?;
    let n = f.n();
    let lhs = entropy(&noise_operator(f, eps)?)?;
    let lambda = (1.0 - 2.0 * eps).powi(2);
    let cap = Caps::global().exact_subsets_costly;
    let rhs = subset_expectation(
        n,
        lambda,
        |t| entropy(&conditional_expectation(f, t).expect("mask within [n]")).expect("nonnegative"),
        mode,
        cap,
    )?
    .mean;
    Ok(GapReport::new(InequalityId::NoisyEntropy, n, lhs, rhs).with_param(eps).with_mode(mode))
}

/// `‖f‖_{1+(q-1)(1-2ε)²}`, the classical bound on `‖f_ε‖_q`.
pub fn hypercontractive_rhs(f: &CubeFunction, q: f64, eps: f64) -> Result<f64> {
    if q.is_nan() || q < 1.0 || q.is_infinite() {
        return Err(Error::InvalidExponent(q));
    }
    check_eps(eps)?;
    let p = 1.0 + (q - 1.0) * (1.0 - 2.0 * eps).powi(2);
    lq_norm(f, p)
}

/// Checks `‖f_ε‖_q ≤ ‖f‖_{1+(q-1)(1-2ε)²}`.
pub fn hypercontractive_gap(f: &CubeFunction, q: f64, eps: f64) -> Result<GapReport> {
    let rhs = hypercontractive_rhs(f, q, eps)?;
    let lhs = lq_norm(&noise_operator(f, eps)?, q)?;
    Ok(GapReport::new(InequalityId::Hypercontractive, f.n(), lhs, rhs).with_q(q).with_param(eps))
}
