use serde::Serialize;

use crate::config::Caps;
use crate::error::{Error, Result};

use super::binary::BinaryMatroid;

/// `T(x, y) = Σ_{i,j} t_{ij} x^i y^j` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuttePolynomial {
    /// `coeffs[i][j]` multiplies `x^i y^j`.
    coeffs: Vec<Vec<i128>>,
}

impl TuttePolynomial {
    /// Trailing zero rows and columns are trimmed.
    pub fn new(mut coeffs: Vec<Vec<i128>>) -> Self {
        let width = coeffs
            .iter()
            .filter_map(|row| row.iter().rposition(|&c| c != 0))
            .max()
            .map_or(1, |j| j + 1);
        for row in &mut coeffs {
            row.resize(width, 0);
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(|r| r.iter().all(|&c| c == 0)) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(vec![0; width]);
        }
        TuttePolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Vec<i128>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> i128 {
        self.coeffs.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        horner(&self.coeffs, x, |row| horner_1d(row, y))
    }

    /// `∂T/∂y`.
    pub fn eval_dy(&self, x: f64, y: f64) -> f64 {
        horner(&self.coeffs, x, |row| {
            row.iter().enumerate().skip(1).rev().fold(0.0, |acc, (j, &c)| acc * y + j as f64 * c as f64)
        })
    }

    /// Exact value at an integer point.
    pub fn eval_int(&self, x: i128, y: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, row| {
            acc * x + row.iter().rev().fold(0, |a, &c| a * y + c)
        })
    }
}

fn horner_1d(row: &[i128], y: f64) -> f64 {
    row.iter().rev().fold(0.0, |acc, &c| acc * y + c as f64)
}

fn horner(rows: &[Vec<i128>], x: f64, inner: impl Fn(&[i128]) -> f64) -> f64 {
    rows.iter().rev().fold(0.0, |acc, row| acc * x + inner(row))
}

/// Corank-nullity sum `Σ_S (x−1)^{k−r(S)} (y−1)^{|S|−r(S)}`, expanded.
pub fn tutte_polynomial(m: &BinaryMatroid) -> Result<TuttePolynomial> {
    let cap = Caps::global().tutte;
    if m.n() > cap {
        return Err(Error::CapExceeded { what: "Tutte polynomial", n: m.n(), cap });
    }
    let (n, k) = (m.n(), m.k());
    let binom = crate::codes::binomial_table(n);
    // c[a][b] = number of subsets with corank a and nullity b.
    let mut c = vec![vec![0i128; n - k + 1]; k + 1];
    for (j, r, count) in m.profile()?.entries() {
        c[k - r][j - r] += count as i128;
    }
    let mut t = vec![vec![0i128; n - k + 1]; k + 1];
    for (a, row) in c.iter().enumerate() {
        for (b, &cnt) in row.iter().enumerate() {
            if cnt == 0 {
                continue;
            }
            for i in 0..=a {
                let sx = if (a - i) % 2 == 0 { 1 } else { -1 };
                for j in 0..=b {
                    let sy = if (b - j) % 2 == 0 { 1 } else { -1 };
                    t[i][j] += sx * sy * cnt * binom[a][i] * binom[b][j];
                }
            }
        }
    }
    let poly = TuttePolynomial::new(t);
    debug_assert!(poly.coeffs.iter().flatten().all(|&c| c >= 0));
    debug_assert_eq!(poly.eval_int(2, 2), 1i128 << n);
    Ok(poly)
}

/// Number of bases, `T(1, 1)`.
pub fn basis_count(t: &TuttePolynomial) -> i128 {
    t.eval_int(1, 1)
}

/// Both Tutte-polynomial forms of the rank-deficiency inequality next to
/// the direct subset sums they should equal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TutteIdentityCheck {
    pub p: f64,
    pub t: f64,
    /// `p^k (1−p)^{n−k} T(1/p, (1+p)/(1−p))`.
    pub primal_tutte: f64,
    /// `E_{S~p} 2^{|S|−r(S)}`.
    pub primal_direct: f64,
    /// `t^{k+1} (1−t)^{n−k−1} ∂T/∂y(1/t, 1/(1−t))`.
    pub deficiency_tutte: f64,
    /// `E_{T~t} (|T| − r(T))`.
    pub deficiency_direct: f64,
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

impl TutteIdentityCheck {
    pub fn primal_residual(&self) -> f64 {
        rel(self.primal_tutte, self.primal_direct)
    }

    /// Relative error, or absolute when both sides are zero.
    pub fn deficiency_residual(&self) -> f64 {
        if self.deficiency_tutte == 0.0 && self.deficiency_direct == 0.0 {
            0.0
        } else {
            rel(self.deficiency_tutte, self.deficiency_direct)
        }
    }

    pub fn max_residual(&self) -> f64 {
        self.primal_residual().max(self.deficiency_residual())
    }
}

/// Evaluates both forms at `p ∈ (0, 1)` with `t = p^{1/(2 ln 2)}`.
pub fn tutte_identity_check(m: &BinaryMatroid, p: f64) -> Result<TutteIdentityCheck> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    let cap = Caps::global().exact_subsets;
    if m.n() > cap {
        return Err(Error::CapExceeded { what: "Tutte identity check", n: m.n(), cap });
    }
    let poly = tutte_polynomial(m)?;
    let profile = m.profile()?;
    let (n, k) = (m.n() as i32, m.k() as i32);
    let t = super::lemma17_t(p);
    Ok(TutteIdentityCheck {
        p,
        t,
        primal_tutte: p.powi(k) * (1.0 - p).powi(n - k) * poly.eval(1.0 / p, (1.0 + p) / (1.0 - p)),
        primal_direct: profile.expect(p, |j, r| ((j - r) as f64).exp2()),
        deficiency_tutte: t.powi(k + 1) * (1.0 - t).powi(n - k - 1) * poly.eval_dy(1.0 / t, 1.0 / (1.0 - t)),
        deficiency_direct: profile.expect(t, |j, r| (j - r) as f64),
    })
}
