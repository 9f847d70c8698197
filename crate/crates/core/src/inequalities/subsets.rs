//! Expectations over random subsets `T ~ λ` of `[n]`, where each coordinate
//! is included independently with probability `λ`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::subset::SubsetMask;

/// How an expectation over random subsets is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetMode {
    /// Sum over all `2^n` subsets.
    Exact,
    /// Average of `samples` independent draws from a generator seeded with `seed`.
    MonteCarlo { samples: u64, seed: u64 },
}

impl SubsetMode {
    pub fn samples(&self) -> Option<u64> {
        match self {
            SubsetMode::Exact => None,
            SubsetMode::MonteCarlo { samples, .. } => Some(*samples),
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            SubsetMode::Exact => None,
            SubsetMode::MonteCarlo { seed, .. } => Some(*seed),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    /// Zero for exact sums.
    pub std_error: f64,
}

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    Ok(())
}

/// `λ^j (1-λ)^{n-j}` for `j = 0..=n`, with `0^0 = 1`.
pub fn cardinality_weights(n: usize, lambda: f64) -> Vec<f64> {
    (0..=n)
        .map(|j| lambda.powi(j as i32) * (1.0 - lambda).powi((n - j) as i32))
        .collect()
}

/// `Σ_T λ^{|T|} (1-λ)^{n-|T|} h(T)` over all subsets of `[n]`, for `n ≤ cap`.
pub fn subset_expectation_exact(
    n: usize,
    lambda: f64,
    h: impl Fn(SubsetMask) -> f64,
    cap: usize,
) -> Result<f64> {
    check_probability(lambda)?;
    if n > cap || n >= 64 {
        return Err(Error::CapExceeded { what: "exact subset expectation", n, cap });
    }
    let weights = cardinality_weights(n, lambda);
    Ok(SubsetMask::all(n)
        .map(|t| {
            let w = weights[t.len()];
            if w == 0.0 {
                0.0
            } else {
                w * h(t)
            }
        })
        .sum())
}

/// Draws `T ~ λ` once per coordinate.
pub fn sample_subset<R: Rng + ?Sized>(n: usize, lambda: f64, rng: &mut R) -> SubsetMask {
    let mut bits = 0u64;
    for i in 0..n {
        if rng.random::<f64>() < lambda {
            bits |= 1 << i;
        }
    }
    SubsetMask(bits)
}

/// Monte Carlo estimate of `E_{T~λ} h(T)`; the standard error is the sample
/// standard deviation over `√samples`.
pub fn subset_expectation_mc(
    n: usize,
    lambda: f64,
    h: impl Fn(SubsetMask) -> f64,
    samples: u64,
    seed: u64,
) -> Result<Estimate> {
    check_probability(lambda)?;
    if samples == 0 {
        return Err(Error::InvalidParameter("Monte Carlo needs at least one sample".into()));
    }
    if n > 64 {
        return Err(Error::CapExceeded { what: "subset sampling", n, cap: 64 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Welford's running mean and variance.
    let (mut mean, mut m2) = (0.0, 0.0);
    for i in 0..samples {
        let x = h(sample_subset(n, lambda, &mut rng));
        let delta = x - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (x - mean);
    }
    let std_error = if samples > 1 {
        (m2 / (samples - 1) as f64).sqrt() / (samples as f64).sqrt()
    } else {
        0.0
    };
    Ok(Estimate { mean, std_error })
}

/// Dispatches on `mode`.
pub fn subset_expectation(
    n: usize,
    lambda: f64,
    h: impl Fn(SubsetMask) -> f64,
    mode: &SubsetMode,
    cap: usize,
) -> Result<Estimate> {
    match *mode {
        SubsetMode::Exact => {
            Ok(Estimate { mean: subset_expectation_exact(n, lambda, h, cap)?, std_error: 0.0 })
        }
        SubsetMode::MonteCarlo { samples, seed } => {
            subset_expectation_mc(n, lambda, h, samples, seed)
        }
    }
}
