use std::f64::consts::LN_2;

use serde::Serialize;

use crate::config::Caps;
use crate::cube::{entropy, noise_operator, power_mean, CubeFunction};
use crate::error::{Error, Result};
use crate::gf2::RankProfile;
use crate::inequalities::{sample_subset, subset_expectation_mc, RExponent, SubsetMode};
use crate::report::{serialize_float, GapReport, InequalityId};
use crate::subset::SubsetMask;

use super::code::LinearCode;
use super::weights::{macwilliams_transform, weight_distribution, WeightDistribution};

fn check_lambda(lambda: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::ProbabilityOutOfRange(lambda));
    }
    Ok(())
}

/// `θ = λ^{2 ln 2}`.
pub fn theta(lambda: f64) -> f64 {
    lambda.powf(2.0 * LN_2)
}

/// `q ln ‖E(f|T)‖_q = (q−1)(|T| − r_C(T)) ln 2` for the scaled indicator of the code.
pub fn cond_exp_norm_exponent(code: &LinearCode, t: SubsetMask, q: f64) -> Result<f64> {
    if q.is_nan() || q <= 1.0 || q.is_infinite() {
        return Err(Error::InvalidExponent(q));
    }
    let t = SubsetMask::checked(t.bits(), code.n())?;
    let deficiency = (t.len() - code.rank_of_columns(t)) as f64;
    Ok((q - 1.0) * deficiency * LN_2)
}

impl LinearCode {
    /// Rank counts of the column matroid.
    pub fn rank_profile(&self) -> Result<RankProfile> {
        self.generator().rank_profile(Caps::global().exact_subsets)
    }
}

/// `E_{T~λ}(|T| − r_C(T))` from a precomputed profile.
pub fn rank_deficiency_from_profile(profile: &RankProfile, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(profile.expect(lambda, |j, r| (j - r) as f64))
}

/// `λn − E_{T~λ} r_C(T)`, exact by subset enumeration or Monte Carlo.
pub fn rank_deficiency(code: &LinearCode, lambda: f64, mode: &SubsetMode) -> Result<f64> {
    check_lambda(lambda)?;
    match *mode {
        SubsetMode::Exact => rank_deficiency_from_profile(&code.rank_profile()?, lambda),
        SubsetMode::MonteCarlo { samples, seed } => Ok(subset_expectation_mc(
            code.n(),
            lambda,
            |t| (t.len() - code.rank_of_columns(t)) as f64,
            samples,
            seed,
        )?
        .mean),
    }
}

/// Route used to evaluate `F(λ, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FMethod {
    /// Build `f = (2^n/|C|) 1_C` as a cube function and apply the noise operator.
    Cube,
    /// `log₂ Σ b_i θ^i` from the dual weight distribution; only `q ∈ {2, ∞}`.
    Weights,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FValue {
    pub lambda: f64,
    #[serde(serialize_with = "serialize_float")]
    pub q: f64,
    pub value: f64,
}

/// `F(λ, q) = (1/(q−1)) log₂ E f^q_{ε(q)}` with `ε(q) = (1 − λ^{1/r(q)})/2`,
/// extended by `F(λ,1) = Ent(f_{(1−√λ)/2})` and `F(λ,∞) = log₂ ‖f_{(1−λ^{2 ln 2})/2}‖_∞`.
pub fn f_value(code: &LinearCode, lambda: f64, q: f64, method: FMethod) -> Result<FValue> {
    check_lambda(lambda)?;
    if q.is_nan() || q < 1.0 {
        return Err(Error::InvalidExponent(q));
    }
    let value = match method {
        FMethod::Cube => f_from_cube(&code.scaled_indicator()?, lambda, q)?,
        FMethod::Weights => {
            if q != 2.0 && q.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "F(λ, q) from weight distributions needs q ∈ {{2, ∞}}, got {q}"
                )));
            }
            dual_weights(code)?.evaluate(theta(lambda)).log2()
        }
    };
    Ok(FValue { lambda, q, value })
}

/// `F(λ, q)` for an already-built scaled indicator.
pub fn f_from_cube(f: &CubeFunction, lambda: f64, q: f64) -> Result<f64> {
    if q == 1.0 {
        let eps = 0.5 * (1.0 - lambda.sqrt());
        return entropy(&noise_operator(f, eps)?);
    }
    if q.is_infinite() {
        let eps = 0.5 * (1.0 - theta(lambda));
        return Ok(noise_operator(f, eps)?.max().log2());
    }
    let eps = RExponent::new(q)?.eps(lambda)?;
    Ok(power_mean(&noise_operator(f, eps)?, q).log2() / (q - 1.0))
}

/// Weight distribution of the dual, by enumeration when the dual is small
/// enough and by MacWilliams otherwise.
pub fn dual_weights(code: &LinearCode) -> Result<WeightDistribution> {
    let caps = Caps::global();
    if code.n() - code.k() <= caps.code_dim {
        weight_distribution(&code.dual_code())
    } else {
        macwilliams_transform(&weight_distribution(code)?, code.n(), code.k())
    }
}

/// Weight distributions of a code and its dual.
pub fn weight_pair(code: &LinearCode) -> Result<(WeightDistribution, WeightDistribution)> {
    let caps = Caps::global();
    let (n, k) = (code.n(), code.k());
    if k <= caps.code_dim {
        let a = weight_distribution(code)?;
        let b = if n - k <= caps.code_dim {
            weight_distribution(&code.dual_code())?
        } else {
            macwilliams_transform(&a, n, k)?
        };
        Ok((a, b))
    } else {
        let b = weight_distribution(&code.dual_code())?;
        let a = macwilliams_transform(&b, n, n - k)?;
        Ok((a, b))
    }
}

/// The four expressions that coincide for linear codes, all in bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma13Values {
    pub lambda: f64,
    pub theta: f64,
    /// `F(λ, 2)` through the cube function.
    pub f2: f64,
    /// `F(λ, ∞)` through the cube function.
    pub f_inf: f64,
    /// `log₂ Σ_i b_i θ^i`.
    pub dual_sum: f64,
    /// `log₂ ((1/|C|) Σ_k a_k (1−θ)^k (1+θ)^{n−k})`.
    pub primal_sum: f64,
}

impl Lemma13Values {
    pub fn max_residual(&self) -> f64 {
        let v = [self.f2, self.f_inf, self.dual_sum, self.primal_sum];
        let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
        hi - lo
    }
}

/// `(1/|C|) Σ_k a_k (1−θ)^k (1+θ)^{n−k}`.
pub fn primal_sum(a: &WeightDistribution, theta: f64) -> f64 {
    let n = a.n();
    let size = a.total() as f64;
    a.counts()
        .iter()
        .enumerate()
        .map(|(k, &c)| c as f64 * (1.0 - theta).powi(k as i32) * (1.0 + theta).powi((n - k) as i32))
        .sum::<f64>()
        / size
}

pub fn lemma13_values(code: &LinearCode, lambda: f64) -> Result<Lemma13Values> {
    check_lambda(lambda)?;
    let f = code.scaled_indicator()?;
    let (a, b) = weight_pair(code)?;
    let th = theta(lambda);
    Ok(Lemma13Values {
        lambda,
        theta: th,
        f2: f_from_cube(&f, lambda, 2.0)?,
        f_inf: f_from_cube(&f, lambda, f64::INFINITY)?,
        dual_sum: b.evaluate(th).log2(),
        primal_sum: primal_sum(&a, th).log2(),
    })
}

/// Checks `F(λ, q) ≤ λn − E_{T~λ} r_C(T)`.
pub fn rank_deficiency_gap(code: &LinearCode, lambda: f64, q: f64, method: FMethod) -> Result<GapReport> {
    let f = f_value(code, lambda, q, method)?;
    let deficiency = rank_deficiency(code, lambda, &SubsetMode::Exact)?;
    Ok(GapReport::new(InequalityId::RankDeficiency, code.n(), f.value, deficiency).with_q(q).with_param(lambda))
}

/// One Monte Carlo sample of `|T| − r_C(T)`, exposed for streaming callers.
pub fn sample_deficiency<R: rand::Rng + ?Sized>(code: &LinearCode, lambda: f64, rng: &mut R) -> usize {
    let t = sample_subset(code.n(), lambda, rng);
    t.len() - code.rank_of_columns(t)
}
