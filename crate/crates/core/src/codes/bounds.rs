//! Weight-distribution bounds: the dual-distance bound driven by rank
//! deficiency, the two erasure-capacity bounds, and the earlier
//! Reed-Muller bound they are compared against.
//!
//! The erasure-capacity bounds hold up to a `2^{o(n)}` factor, which is set
//! to 1 here; callers report them, they do not assert them.

use std::f64::consts::LN_2;

use num_bigint::BigUint;

use crate::error::{Error, Result};

use super::weights::{binomial_table, WeightDistribution};

/// Absolute constant of the Reed-Muller bound `a_k ≤ 2^{C R k*(2 log₂(n/k*) + 3)}`.
pub const SBERLO_CONSTANT: f64 = 30.0;

/// `min(k, n − k)`.
pub fn k_star(n: usize, k: usize) -> usize {
    k.min(n.saturating_sub(k))
}

fn check_rate(rate: f64) -> Result<()> {
    if !(0.0..1.0).contains(&rate) {
        return Err(Error::InvalidParameter(format!("rate {rate} outside [0, 1)")));
    }
    Ok(())
}

/// `log₂` of `b_i ≤ λ^{−(2 ln 2) i} · 2^{λn − E_{T~λ} r_C(T)}`; `+∞` when `λ = 0 < i`.
pub fn dual_weight_bound_log2(lambda: f64, i: usize, deficiency: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::ProbabilityOutOfRange(lambda));
    }
    if lambda == 0.0 {
        return Ok(if i == 0 { deficiency } else { f64::INFINITY });
    }
    Ok(-(2.0 * LN_2) * i as f64 * lambda.log2() + deficiency)
}

pub fn dual_weight_bound(lambda: f64, i: usize, deficiency: f64) -> Result<f64> {
    Ok(dual_weight_bound_log2(lambda, i, deficiency)?.exp2())
}

/// `log₂` of `a_k ≤ (1/(1−R))^{(2 ln 2) k*}`, valid when the dual achieves capacity.
pub fn bec_bound_dual_side_log2(n: usize, rate: f64, k: usize) -> Result<f64> {
    check_rate(rate)?;
    Ok(-(2.0 * LN_2) * k_star(n, k) as f64 * (1.0 - rate).log2())
}

pub fn bec_bound_dual_side(n: usize, rate: f64, k: usize) -> Result<f64> {
    Ok(bec_bound_dual_side_log2(n, rate, k)?.exp2())
}

/// `log₂` of the bound valid when the code itself achieves capacity, with
/// `θ = R^{2 ln 2}`:
/// `|C| / ((1−θ)^{k*} (1+θ)^{n−k*})` if `k* ≤ (1−θ)n/2`, else `C(n,k*) |C| / 2^n`.
pub fn bec_bound_primal_side_log2(n: usize, rate: f64, k: usize, code_size: f64) -> Result<f64> {
    check_rate(rate)?;
    if k > n || n > 64 {
        return Err(Error::InvalidParameter(format!("weight {k} invalid for length {n}")));
    }
    let theta = rate.powf(2.0 * LN_2);
    let ks = k_star(n, k);
    let log_size = code_size.log2();
    if ks as f64 <= (1.0 - theta) * n as f64 / 2.0 {
        Ok(log_size - ks as f64 * (1.0 - theta).log2() - (n - ks) as f64 * (1.0 + theta).log2())
    } else {
        let binom = binomial_table(n)[n][ks] as f64;
        Ok(binom.log2() + log_size - n as f64)
    }
}

pub fn bec_bound_primal_side(n: usize, rate: f64, k: usize, code_size: f64) -> Result<f64> {
    Ok(bec_bound_primal_side_log2(n, rate, k, code_size)?.exp2())
}

/// Exponent `C R k* (2 log₂(n/k*) + 3)` with `C = 30`.
pub fn sberlo_bound_log2(n: usize, rate: f64, k: usize) -> Result<f64> {
    let ks = k_star(n, k);
    if ks == 0 {
        return Err(Error::InvalidParameter("the Reed-Muller bound needs k* ≥ 1".into()));
    }
    Ok(SBERLO_CONSTANT * rate * ks as f64 * (2.0 * (n as f64 / ks as f64).log2() + 3.0))
}

pub fn sberlo_bound(n: usize, rate: f64, k: usize) -> Result<f64> {
    Ok(sberlo_bound_log2(n, rate, k)?.exp2())
}

/// Both sides of `Σ a_k α^{n−k} ≤ Σ a_k α^k` at `α = num/den`, scaled by `den^n`
/// so they are exact integers.
pub fn alpha_reversal(a: &WeightDistribution, num: u64, den: u64) -> Result<(BigUint, BigUint)> {
    if den == 0 || num > den {
        return Err(Error::InvalidParameter(format!("α = {num}/{den} outside [0, 1]")));
    }
    let n = a.n() as u32;
    let (num, den) = (BigUint::from(num), BigUint::from(den));
    let mut reversed = BigUint::ZERO;
    let mut forward = BigUint::ZERO;
    for (k, &count) in a.counts().iter().enumerate() {
        let k = k as u32;
        let c = BigUint::from(count);
        reversed += &c * num.pow(n - k) * den.pow(k);
        forward += &c * num.pow(k) * den.pow(n - k);
    }
    Ok((reversed, forward))
}
