//! Seeded random inputs and structured families for verification runs.
//!
//! Every trial draws from its own ChaCha stream keyed by `(seed, trial)`, so
//! results do not depend on how trials are scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::LinearCode;
use crate::cube::CubeFunction;
use crate::error::Result;
use crate::matroids::{BinaryMatroid, Graph};
use crate::subset::full_bits;

/// Generator for trial `trial` under root seed `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// I.i.d. uniform `[0, 1)` values.
pub fn random_function<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CubeFunction> {
    CubeFunction::new(n, (0..1usize << n).map(|_| rng.random::<f64>()).collect())
}

/// I.i.d. uniform `(0, 1]` values.
pub fn random_positive_function<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CubeFunction> {
    CubeFunction::new(n, (0..1usize << n).map(|_| 1.0 - rng.random::<f64>()).collect())
}

/// Like [`random_positive_function`] but redrawn until nonconstant (only matters for `n = 0`).
pub fn random_nonconstant_function<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CubeFunction> {
    loop {
        let f = random_positive_function(n, rng)?;
        if !f.is_constant() || n == 0 {
            return Ok(f);
        }
    }
}

/// A named deterministic test function.
#[derive(Debug, Clone)]
pub struct Structured {
    pub name: String,
    pub f: CubeFunction,
}

/// Constants, scaled point indicators, `1 + w_R/2`, subcube indicators and
/// code indicators on `{0,1}^n`.
pub fn structured_family(n: usize) -> Result<Vec<Structured>> {
    let mut out = Vec::new();
    let mut push = |name: String, f: CubeFunction| out.push(Structured { name, f });
    push("constant".into(), CubeFunction::constant(n, 1.0)?);
    for x in 0..1usize << n {
        push(format!("point-{x}"), CubeFunction::scaled_point(n, x)?);
    }
    for r in 1..1u64 << n {
        let w = CubeFunction::character(n, r)?;
        push(format!("character-{r}"), w.map(|v| 1.0 + 0.5 * v));
    }
    for j in 1..n {
        // Coordinates 1..=j fixed to zero.
        let fixed = full_bits(j) as usize;
        push(format!("subcube-{j}"), CubeFunction::from_fn(n, |x| if x & fixed == 0 { 1.0 } else { 0.0 })?);
    }
    if n >= 2 {
        push("repetition".into(), LinearCode::repetition(n)?.scaled_indicator()?);
        push("even-weight".into(), LinearCode::repetition(n)?.dual_code().scaled_indicator()?);
    }
    Ok(out)
}

/// Uniform full-rank `k × n` generator matrix.
pub fn random_code<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<LinearCode> {
    let mask = full_bits(n);
    loop {
        let rows: Vec<u64> = (0..k).map(|_| rng.random::<u64>() & mask).collect();
        if let Ok(code) = LinearCode::from_rows(n, rows) {
            return Ok(code);
        }
    }
}

/// `rows × n` matrix with i.i.d. fair bits; rank may be deficient and zero columns occur.
pub fn random_matroid<R: Rng + ?Sized>(n: usize, rows: usize, rng: &mut R) -> Result<BinaryMatroid> {
    let mask = full_bits(n);
    BinaryMatroid::from_rows(n, (0..rows).map(|_| rng.random::<u64>() & mask).collect())
}

/// `e` edges with uniform endpoints, so loops and parallel edges appear.
pub fn random_multigraph<R: Rng + ?Sized>(v: usize, e: usize, rng: &mut R) -> Result<Graph> {
    Graph::new(v, (0..e).map(|_| (rng.random_range(0..v), rng.random_range(0..v))).collect())
}
