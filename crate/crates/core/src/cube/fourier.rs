//! Walsh-Fourier transform under the uniform measure.
//!
//! `f̂(R) = E_x f(x) w_R(x)` and `f = Σ_R f̂(R) w_R`, so Parseval reads
//! `E f² = Σ_R f̂(R)²`.

use super::CubeFunction;

/// Walsh-Fourier coefficients, indexed by the bitmask of `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSpectrum {
    n: usize,
    coeffs: Vec<f64>,
}

impl FourierSpectrum {
    pub fn new(n: usize, coeffs: Vec<f64>) -> crate::Result<Self> {
        // Reuse the cube-side validation for the length and cap.
        let checked = CubeFunction::new(n, coeffs)?;
        Ok(FourierSpectrum { n, coeffs: checked.into_values() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, r: u64) -> f64 {
        self.coeffs[r as usize]
    }

    /// `Σ_R f̂(R)²`, equal to `E f²`.
    pub fn energy(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }
}

/// In-place unnormalized Hadamard butterfly, O(n 2^n).
pub(crate) fn butterfly(buf: &mut [f64]) {
    let mut half = 1;
    while half < buf.len() {
        for block in buf.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                *a = u + v;
                *b = u - v;
            }
        }
        half *= 2;
    }
}

pub fn wht_forward(f: &CubeFunction) -> FourierSpectrum {
    let mut coeffs = f.values().to_vec();
    butterfly(&mut coeffs);
    let scale = 1.0 / coeffs.len() as f64;
    coeffs.iter_mut().for_each(|c| *c *= scale);
    FourierSpectrum { n: f.n(), coeffs }
}

pub fn wht_inverse(s: &FourierSpectrum) -> CubeFunction {
    let mut values = s.coeffs.clone();
    butterfly(&mut values);
    CubeFunction::from_parts(s.n, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn constant_has_only_empty_coefficient() {
        let f = CubeFunction::constant(3, 2.5).unwrap();
        let s = wht_forward(&f);
        assert_eq!(s.coeff(0), 2.5);
        assert!(s.coeffs()[1..].iter().all(|&c| c == 0.0));
    }

    #[test]
    fn two_point_example() {
        let f = CubeFunction::new(1, vec![2.0, 0.0]).unwrap();
        assert_eq!(wht_forward(&f).coeffs(), &[1.0, 1.0]);
        let s = FourierSpectrum::new(1, vec![1.0, 1.0]).unwrap();
        assert_eq!(wht_inverse(&s).values(), &[2.0, 0.0]);
    }

    #[test]
    fn characters_are_orthonormal() {
        for r in 0..8u64 {
            let s = wht_forward(&CubeFunction::character(3, r).unwrap());
            for q in 0..8u64 {
                let expect = if q == r { 1.0 } else { 0.0 };
                assert!((s.coeff(q) - expect).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn only_empty_coefficient_inverts_to_constant() {
        let mut coeffs = vec![0.0; 16];
        coeffs[0] = -1.5;
        let f = wht_inverse(&FourierSpectrum::new(4, coeffs).unwrap());
        assert!(close(f.values(), &[-1.5; 16], 0.0));
    }
}
