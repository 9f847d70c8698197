use super::fourier::{butterfly, wht_forward};
use super::CubeFunction;
use crate::error::{Error, Result};
use crate::subset::SubsetMask;

/// `T_ε f`, computed through the Fourier multiplier `(1-2ε)^{|R|}`.
pub fn noise_operator(f: &CubeFunction, eps: f64) -> Result<CubeFunction> {
    if !(0.0..=0.5).contains(&eps) {
        return Err(Error::NoiseOutOfRange(eps));
    }
    if eps == 0.0 {
        return Ok(f.clone());
    }
    if eps == 0.5 {
        return Ok(CubeFunction::from_parts(f.n(), vec![f.mean(); f.len()]));
    }
    let rho = 1.0 - 2.0 * eps;
    let mut spectrum = wht_forward(f);
    let powers: Vec<f64> = (0..=f.n()).map(|k| rho.powi(k as i32)).collect();
    for (r, c) in spectrum.coeffs_mut().iter_mut().enumerate() {
        *c *= powers[r.count_ones() as usize];
    }
    let mut values = spectrum.coeffs().to_vec();
    butterfly(&mut values);
    Ok(CubeFunction::from_parts(f.n(), values))
}

/// `E(f|T)`: averages `f` over every coordinate outside `T`.
///
/// Works directly on values, one coordinate at a time, without passing
/// through the spectrum.
pub fn conditional_expectation(f: &CubeFunction, t: SubsetMask) -> Result<CubeFunction> {
    let n = f.n();
    let t = SubsetMask::checked(t.bits(), n)?;
    let mut values = f.values().to_vec();
    for i in t.complement(n).indices() {
        let stride = 1usize << i;
        for block in values.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let avg = 0.5 * (*a + *b);
                *a = avg;
                *b = avg;
            }
        }
    }
    Ok(CubeFunction::from_parts(n, values))
}

/// `(E_x |f|^q)^{1/q}` under the uniform measure; `q = ∞` gives the maximum of `|f|`.
pub fn lq_norm(f: &CubeFunction, q: f64) -> Result<f64> {
    if q.is_nan() || q < 1.0 {
        return Err(Error::InvalidExponent(q));
    }
    if q.is_infinite() {
        return Ok(f.values().iter().map(|v| v.abs()).fold(0.0, f64::max));
    }
    Ok(power_mean(f, q).powf(1.0 / q))
}

/// `E_x |f|^q`.
pub(crate) fn power_mean(f: &CubeFunction, q: f64) -> f64 {
    let len = f.len() as f64;
    if q == 1.0 {
        f.values().iter().map(|v| v.abs()).sum::<f64>() / len
    } else if q == 2.0 {
        f.values().iter().map(|v| v * v).sum::<f64>() / len
    } else {
        f.values().iter().map(|v| v.abs().powf(q)).sum::<f64>() / len
    }
}

/// `ln ‖f‖_q`, with the power mean kept in log space.
pub(crate) fn ln_norm(f: &CubeFunction, q: f64) -> f64 {
    if q.is_infinite() {
        return f.values().iter().map(|v| v.abs()).fold(0.0, f64::max).ln();
    }
    power_mean(f, q).ln() / q
}

fn xlog2x(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v * v.log2()
    }
}

/// `Ent(f) = E f log₂ f − E f log₂ E f`, with `0 log 0 = 0`.
pub fn entropy(f: &CubeFunction) -> Result<f64> {
    f.check_nonnegative()?;
    let mean = f.mean();
    let e_flogf = f.values().iter().map(|&v| xlog2x(v)).sum::<f64>() / f.len() as f64;
    // Nonnegative by convexity; clamp roundoff from near-constant inputs.
    Ok((e_flogf - xlog2x(mean)).max(0.0))
}

/// `Ent_q(f) = (1/(q-1)) log₂ E f^q` for `E f = 1`.
pub fn renyi_entropy(f: &CubeFunction, q: f64) -> Result<f64> {
    if q.is_nan() || q <= 1.0 {
        return Err(Error::InvalidExponent(q));
    }
    f.check_nonnegative()?;
    let mean = f.mean();
    if (mean - 1.0).abs() > 1e-9 {
        return Err(Error::Unnormalized { mean });
    }
    if q.is_infinite() {
        return Ok(f.max().log2());
    }
    Ok(power_mean(f, q).log2() / (q - 1.0))
}

/// `ℰ(f,g) = E_x Σ_{y~x} (f(x)-f(y))(g(x)-g(y))`.
pub fn dirichlet_form(f: &CubeFunction, g: &CubeFunction) -> Result<f64> {
    f.ensure_same_dim(g)?;
    let (fv, gv) = (f.values(), g.values());
    let mut total = 0.0;
    for i in 0..f.n() {
        let bit = 1usize << i;
        for x in (0..fv.len()).filter(|x| x & bit == 0) {
            let y = x | bit;
            total += (fv[x] - fv[y]) * (gv[x] - gv[y]);
        }
    }
    // Each unordered edge is seen from both endpoints.
    Ok(2.0 * total / fv.len() as f64)
}
