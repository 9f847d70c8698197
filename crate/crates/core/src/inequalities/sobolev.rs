//! The log-Sobolev inequality behind the main theorem, its two-point base
//! case, and the derivative comparison at `ε = 0`.

use std::f64::consts::LN_2;

use crate::cube::{dirichlet_form, ln_norm, noise_operator, power_mean, CubeFunction};
use crate::error::{Error, Result};
use crate::report::{GapReport, InequalityId};
use crate::subset::SubsetMask;

use super::exponent::r_exponent;
use super::noise::ln_conditional_norm;
use super::subsets::cardinality_weights;

/// `n ln ‖f‖_q − Σ_{|T|=n-1} ln ‖E(f|T)‖_q`.
fn edge_deficit(f: &CubeFunction, q: f64) -> f64 {
    let n = f.n();
    let full = SubsetMask::full(n);
    let drop_one: f64 = (0..n)
        .map(|i| ln_conditional_norm(f, SubsetMask(full.bits() & !(1 << i)), q))
        .sum();
    n as f64 * ln_norm(f, q) - drop_one
}

/// Checks `ℰ(f^{q-1}, f) ≥ 4 r(q) E f^q (n ln ‖f‖_q − Σ_{|T|=n-1} ln ‖E(f|T)‖_q)`.
///
/// The report has `lhs` = the right-hand product and `rhs` = the Dirichlet form.
pub fn log_sobolev_gap(f: &CubeFunction, q: f64) -> Result<GapReport> {
    f.check_nonnegative()?;
    let r = r_exponent(q)?;
    if q.is_infinite() {
        return Err(Error::InvalidExponent(q));
    }
    let energy = dirichlet_form(&f.map(|v| v.powf(q - 1.0)), f)?;
    let bound = 4.0 * r * power_mean(f, q) * edge_deficit(f, q);
    Ok(GapReport::new(InequalityId::LogSobolev, f.n(), bound, energy).with_q(q))
}

/// When equality holds in the log-Sobolev inequality: for `q ≥ 2`, adjacent
/// points with different values must include a zero; for `1 < q < 2`, only
/// constants.
pub fn log_sobolev_equality_expected(f: &CubeFunction, q: f64) -> bool {
    if q < 2.0 {
        return f.is_constant();
    }
    let v = f.values();
    (0..f.n()).all(|i| {
        let bit = 1 << i;
        (0..v.len())
            .filter(|x| x & bit == 0)
            .all(|x| v[x] == v[x | bit] || v[x] == 0.0 || v[x | bit] == 0.0)
    })
}

/// Two-point inequality for `g(0) = x`, `g(1) = 2 − x`, `0 ≤ x ≤ 1`:
/// `ℰ(g^{q-1}, g) − 4 r(q) E g^q ln ‖g‖_q ≥ 0`. The report parameter is `x`.
pub fn two_point_gap_at(x: f64, q: f64) -> Result<GapReport> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParameter(format!("two-point value x = {x} outside [0, 1]")));
    }
    let r = r_exponent(q)?;
    if q.is_infinite() {
        return Err(Error::InvalidExponent(q));
    }
    let (g0, g1) = (x, 2.0 - x);
    let energy = (g1.powf(q - 1.0) - g0.powf(q - 1.0)) * (g1 - g0);
    let moment = 0.5 * (g0.powf(q) + g1.powf(q));
    let bound = 4.0 * r * moment * moment.ln() / q;
    Ok(GapReport::new(InequalityId::TwoPoint, 1, bound, energy).with_q(q).with_param(x))
}

/// Two-point inequality parametrized by `t = (2 − x)/x ≥ 1`; `t = ∞` means `x = 0`.
/// The report parameter is `t`.
pub fn two_point_gap(t: f64, q: f64) -> Result<GapReport> {
    if t.is_nan() || t < 1.0 {
        return Err(Error::InvalidParameter(format!("two-point ratio t = {t} is below 1")));
    }
    let x = if t.is_infinite() { 0.0 } else { 2.0 / (1.0 + t) };
    let mut report = two_point_gap_at(x, q)?;
    report.param = Some(t);
    Ok(report)
}

/// Whether the two-point inequality is an equality at `x`.
pub fn two_point_equality_expected(x: f64, q: f64) -> bool {
    x == 1.0 || (x == 0.0 && q >= 2.0)
}

/// Forward-difference step used by [`derivative_check`].
pub const DERIVATIVE_STEP: f64 = 1e-5;

/// Both sides of the main inequality differentiated in `ε` at zero, by the
/// closed-form expressions and by finite differences.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeCheck {
    pub n: usize,
    pub q: f64,
    /// `−ℰ(f^{q-1}, f) / (2 E f^q)`.
    pub f_formula: f64,
    pub f_difference: f64,
    /// `−2 r(q) (n ln ‖f‖_q − Σ_{|T|=n-1} ln ‖E(f|T)‖_q)`.
    pub g_formula: f64,
    pub g_difference: f64,
}

impl DerivativeCheck {
    pub fn f_relative_error(&self) -> f64 {
        relative_error(self.f_difference, self.f_formula)
    }

    pub fn g_relative_error(&self) -> f64 {
        relative_error(self.g_difference, self.g_formula)
    }

    pub fn strict(&self) -> bool {
        self.f_formula < self.g_formula
    }

    /// `lhs = F'(f,0)`, `rhs = G'(f,0)`.
    pub fn report(&self) -> GapReport {
        GapReport::new(InequalityId::Derivative, self.n, self.f_formula, self.g_formula).with_q(self.q)
    }
}

fn relative_error(approx: f64, exact: f64) -> f64 {
    let diff = (approx - exact).abs();
    if exact == 0.0 {
        diff
    } else {
        diff / exact.abs()
    }
}

/// Second-order one-sided difference `(−3φ(0) + 4φ(h) − φ(2h)) / 2h`.
fn forward_difference(phi: impl Fn(f64) -> Result<f64>, h: f64) -> Result<f64> {
    Ok((-3.0 * phi(0.0)? + 4.0 * phi(h)? - phi(2.0 * h)?) / (2.0 * h))
}

/// Compares the closed-form derivatives at `ε = 0` with finite differences,
/// by exact enumeration over subsets (`n ≤ cap`).
pub fn derivative_check(f: &CubeFunction, q: f64, cap: usize) -> Result<DerivativeCheck> {
    f.check_nonnegative()?;
    let r = r_exponent(q)?;
    if q.is_infinite() {
        return Err(Error::InvalidExponent(q));
    }
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let n = f.n();
    if n > cap {
        return Err(Error::CapExceeded { what: "derivative check", n, cap });
    }
    let energy = dirichlet_form(&f.map(|v| v.powf(q - 1.0)), f)?;
    let f_formula = -energy / (2.0 * power_mean(f, q));
    let g_formula = -2.0 * r * edge_deficit(f, q);

    let f_difference =
        forward_difference(|eps| Ok(ln_norm(&noise_operator(f, eps)?, q)), DERIVATIVE_STEP)?;

    let table: Vec<f64> = SubsetMask::all(n).map(|t| ln_conditional_norm(f, t, q)).collect();
    let g_of = |eps: f64| -> Result<f64> {
        let lambda = (1.0 - 2.0 * eps).powf(r);
        let w = cardinality_weights(n, lambda);
        Ok(table.iter().enumerate().map(|(t, v)| w[(t as u64).count_ones() as usize] * v).sum())
    };
    let g_difference = forward_difference(g_of, DERIVATIVE_STEP)?;

    Ok(DerivativeCheck { n, q, f_formula, f_difference, g_formula, g_difference })
}

/// `(2/ln 2) / (q−1)`, the constant of the `q ≥ 2` two-point form; equals `4 r(q) / q`.
pub fn two_point_constant_large_q(q: f64) -> f64 {
    2.0 / LN_2 / (q - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_function_log_sobolev() {
        let f = CubeFunction::constant(3, 1.7).unwrap();
        let r = log_sobolev_gap(&f, 2.5).unwrap();
        assert_eq!(r.rhs, 0.0);
        assert!(r.lhs.abs() < 1e-14);
        assert!(r.equality);
    }

    #[test]
    fn point_indicator_equality_at_q3() {
        let f = CubeFunction::scaled_point(3, 6).unwrap();
        let r = log_sobolev_gap(&f, 3.0).unwrap();
        assert!(r.gap.abs() <= 1e-9 * r.lhs.abs().max(1.0), "{r:?}");
        assert!(log_sobolev_equality_expected(&f, 3.0));
        assert!(!log_sobolev_equality_expected(&f, 1.5));
    }

    #[test]
    fn strict_at_q_one_and_half() {
        let f = CubeFunction::new(2, vec![0.2, 0.9, 0.5, 0.35]).unwrap();
        let r = log_sobolev_gap(&f, 1.5).unwrap();
        assert!(r.gap > 0.0 && !r.equality, "{r:?}");
    }

    #[test]
    fn two_point_examples() {
        assert!(two_point_gap(1.0, 3.0).unwrap().gap.abs() < 1e-15);
        let point = two_point_gap(f64::INFINITY, 3.0).unwrap();
        assert!(point.gap.abs() < 1e-12 && point.equality);
        // At x = 0 and 1 < q < 2 the claim reduces to q ≥ 4 − 2^{3−q}.
        let q: f64 = 1.5;
        let strict = two_point_gap_at(0.0, q).unwrap();
        assert!(strict.gap > 0.0 && !strict.equality);
        let rhs = 2f64.powf(q - 1.0) * 2.0;
        assert_eq!(strict.rhs, rhs);
        let scaled = strict.lhs / (rhs / q);
        assert!((scaled - (4.0 - 2f64.powf(3.0 - q))).abs() < 1e-12);
        assert!(two_point_gap(0.5, 2.0).is_err());
    }

    #[test]
    fn two_point_matches_cube_log_sobolev() {
        for x in [0.0, 0.3, 0.8, 1.0] {
            for q in [1.2, 2.0, 4.0] {
                let g = CubeFunction::new(1, vec![x, 2.0 - x]).unwrap();
                let cube = log_sobolev_gap(&g, q).unwrap();
                let two = two_point_gap_at(x, q).unwrap();
                assert!((cube.gap - two.gap).abs() < 1e-12, "x={x} q={q}");
            }
        }
    }

    #[test]
    fn large_q_constant() {
        for q in [2.0, 3.0, 8.0] {
            assert!((two_point_constant_large_q(q) - 4.0 * r_exponent(q).unwrap() / q).abs() < 1e-14);
        }
    }

    #[test]
    fn derivative_formula_matches_difference() {
        // f = 1 + 0.5 w_{1}, n = 2, q = 2
        let f = CubeFunction::from_fn(2, |x| if x & 1 == 0 { 1.5 } else { 0.5 }).unwrap();
        let d = derivative_check(&f, 2.0, 13).unwrap();
        // ln ‖f_ε‖_2 = ½ ln(1 + 0.25 (1−2ε)²), so F'(0) = −0.5 / 1.25.
        assert!((d.f_formula + 0.4).abs() < 1e-14);
        assert!(d.f_relative_error() < 1e-4 && d.g_relative_error() < 1e-4, "{d:?}");
        assert!(d.strict());
    }

    #[test]
    fn derivative_rejects_constant() {
        let f = CubeFunction::constant(2, 1.0).unwrap();
        assert_eq!(derivative_check(&f, 2.0, 13), Err(Error::ConstantFunction));
    }
}
