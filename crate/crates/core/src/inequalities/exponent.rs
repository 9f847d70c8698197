use std::f64::consts::LN_2;

use crate::error::{Error, Result};

/// The exponent `r(q)` tying the noise level to the subset density
/// `λ = (1-2ε)^{r(q)}`.
///
/// ```text
/// r(q) = 2^{3-q} (2^{q-1} - 1) / ((q-1) 2 ln 2)   for 1 < q ≤ 2
/// r(q) = q / ((q-1) 2 ln 2)                        for q ≥ 2
/// ```
///
/// `r` is continuous, `r(2) = 1/ln 2`, `r(q) → 2` as `q → 1` and
/// `r(∞) = 1/(2 ln 2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RExponent {
    q: f64,
    r: f64,
}

impl RExponent {
    pub fn new(q: f64) -> Result<Self> {
        Ok(RExponent { q, r: r_exponent(q)? })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// `λ(q, ε) = (1-2ε)^{r(q)}`.
    pub fn lambda(&self, eps: f64) -> Result<f64> {
        if !(0.0..=0.5).contains(&eps) {
            return Err(Error::NoiseOutOfRange(eps));
        }
        Ok((1.0 - 2.0 * eps).powf(self.r))
    }

    /// Inverse of [`lambda`](Self::lambda): `ε(q) = (1 - λ^{1/r(q)}) / 2`.
    pub fn eps(&self, lambda: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::ProbabilityOutOfRange(lambda));
        }
        Ok(0.5 * (1.0 - lambda.powf(1.0 / self.r)))
    }
}

pub fn r_exponent(q: f64) -> Result<f64> {
    if q.is_nan() || q <= 1.0 {
        return Err(Error::InvalidExponent(q));
    }
    let scale = 1.0 / (2.0 * LN_2);
    if q.is_infinite() {
        return Ok(scale);
    }
    if q <= 2.0 {
        // 2^{q-1} - 1 and q - 1 both vanish at q = 1; exp_m1 keeps the ratio accurate.
        let num = (3.0 - q).exp2() * ((q - 1.0) * LN_2).exp_m1();
        Ok(scale * num / (q - 1.0))
    } else {
        Ok(scale * q / (q - 1.0))
    }
}
