use crate::config::Caps;
use crate::cube::CubeFunction;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::subset::SubsetMask;

/// A binary linear code given by a generator matrix with independent rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: BitMatrix,
}

impl LinearCode {
    pub fn new(generator: BitMatrix) -> Result<Self> {
        let rank = generator.rank();
        if rank != generator.row_count() {
            return Err(Error::DependentRows { rank, rows: generator.row_count() });
        }
        Ok(LinearCode { generator })
    }

    /// Builds the code spanned by `rows`, dropping dependent rows.
    pub fn spanned_by(n: usize, rows: Vec<u64>) -> Result<Self> {
        let (basis, _) = BitMatrix::new(n, rows)?.rref();
        Self::new(BitMatrix::new(n, basis)?)
    }

    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Self> {
        Self::new(BitMatrix::new(n, rows)?)
    }

    /// Code file: `k n`, then `k` rows of `n` characters from `{0,1}`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(BitMatrix::parse(text)?)
    }

    /// `F_2^n`.
    pub fn full_space(n: usize) -> Result<Self> {
        Self::new(BitMatrix::identity(n)?)
    }

    /// `{0}` of length `n`.
    pub fn zero_code(n: usize) -> Result<Self> {
        Self::new(BitMatrix::zero(0, n)?)
    }

    /// `{0…0, 1…1}`.
    pub fn repetition(n: usize) -> Result<Self> {
        Self::from_rows(n, vec![crate::subset::full_bits(n)])
    }

    /// `RM(r, m)`: evaluations of all monomials of degree at most `r` in `m`
    /// variables, on the points `0..2^m` (variable `i` is bit `i` of the point).
    pub fn reed_muller(r: usize, m: usize) -> Result<Self> {
        if r > m || m > 6 {
            return Err(Error::InvalidReedMuller { r, m });
        }
        let n = 1usize << m;
        let mut monomials: Vec<usize> = (0..n).filter(|a| a.count_ones() as usize <= r).collect();
        monomials.sort_by_key(|a| (a.count_ones(), *a));
        let rows = monomials
            .into_iter()
            .map(|a| (0..n).filter(|j| j & a == a).fold(0u64, |w, j| w | 1 << j))
            .collect();
        Self::from_rows(n, rows)
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.row_count()
    }

    pub fn rate(&self) -> f64 {
        if self.n() == 0 {
            0.0
        } else {
            self.k() as f64 / self.n() as f64
        }
    }

    /// `r_C(T)`: rank of the generator columns indexed by `T`.
    pub fn rank_of_columns(&self, t: SubsetMask) -> usize {
        self.generator.rank_of_columns(t)
    }

    pub fn dual_code(&self) -> LinearCode {
        let rows = self.generator.nullspace();
        LinearCode { generator: BitMatrix::new(self.n(), rows).expect("nullspace fits the width") }
    }

    /// Same set of codewords.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.generator.same_row_space(&other.generator)
    }

    pub fn contains(&self, word: u64) -> bool {
        self.generator.spans(word)
    }

    pub(crate) fn check_enumerable(&self, caps: &Caps) -> Result<()> {
        if self.k() > caps.code_dim {
            return Err(Error::CapExceeded { what: "codeword enumeration", n: self.k(), cap: caps.code_dim });
        }
        Ok(())
    }

    /// Calls `visit` on every codeword, in Gray-code order starting from zero.
    pub fn for_each_codeword(&self, caps: &Caps, mut visit: impl FnMut(u64)) -> Result<()> {
        self.check_enumerable(caps)?;
        gray_walk(self.generator.rows(), 0, &mut visit);
        Ok(())
    }

    /// `f = (2^n / |C|) · 1_C`, whose spectrum is `1_{C⊥}`.
    pub fn scaled_indicator(&self) -> Result<CubeFunction> {
        let caps = Caps::global();
        let n = self.n();
        if n > caps.cube_dim {
            return Err(Error::DimensionOverCap { n, cap: caps.cube_dim });
        }
        let height = (n - self.k()) as i32;
        let mut values = vec![0.0; 1 << n];
        let v = 2f64.powi(height);
        self.for_each_codeword(caps, |c| values[c as usize] = v)?;
        CubeFunction::new(n, values)
    }
}

/// Visits `start ⊕ span(rows)` in Gray-code order.
pub(crate) fn gray_walk(rows: &[u64], start: u64, visit: &mut impl FnMut(u64)) {
    let mut word = start;
    visit(word);
    for i in 1u64..1u64 << rows.len() {
        word ^= rows[i.trailing_zeros() as usize];
        visit(word);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::wht_forward;

    #[test]
    fn rejects_dependent_rows() {
        let err = LinearCode::from_rows(3, vec![0b011, 0b110, 0b101]).unwrap_err();
        assert_eq!(err, Error::DependentRows { rank: 2, rows: 3 });
        assert_eq!(LinearCode::spanned_by(3, vec![0b011, 0b110, 0b101]).unwrap().k(), 2);
    }

    #[test]
    fn reed_muller_dimensions() {
        assert_eq!(LinearCode::reed_muller(0, 4).unwrap().k(), 1);
        assert!(LinearCode::reed_muller(0, 3).unwrap().same_code(&LinearCode::repetition(8).unwrap()));
        assert!(LinearCode::reed_muller(3, 3).unwrap().same_code(&LinearCode::full_space(8).unwrap()));
        assert_eq!(LinearCode::reed_muller(1, 3).unwrap().k(), 4);
        assert_eq!(LinearCode::reed_muller(2, 4).unwrap().k(), 11);
        assert_eq!(LinearCode::reed_muller(2, 6).unwrap().k(), 22);
        assert!(LinearCode::reed_muller(3, 2).is_err());
        assert!(LinearCode::reed_muller(1, 7).is_err());
    }

    #[test]
    fn reed_muller_duality() {
        for m in 1..=5 {
            for r in 0..m {
                let dual = LinearCode::reed_muller(r, m).unwrap().dual_code();
                let expected = LinearCode::reed_muller(m - r - 1, m).unwrap();
                assert!(dual.same_code(&expected), "RM({r},{m})");
            }
        }
    }

    #[test]
    fn dual_examples() {
        let full = LinearCode::full_space(5).unwrap();
        assert_eq!(full.dual_code().k(), 0);
        let rep = LinearCode::repetition(2).unwrap();
        assert!(rep.dual_code().same_code(&rep));
        let even = LinearCode::repetition(8).unwrap().dual_code();
        assert_eq!(even.k(), 7);
        assert!(even.generator().rows().iter().all(|r| r.count_ones() % 2 == 0));
    }

    #[test]
    fn dual_of_dual_is_original() {
        let c = LinearCode::from_rows(7, vec![0b1011000, 0b0101100, 0b0010110]).unwrap();
        assert!(c.dual_code().dual_code().same_code(&c));
    }

    #[test]
    fn rank_of_columns_examples() {
        let rep = LinearCode::repetition(2).unwrap();
        assert_eq!(rep.rank_of_columns(SubsetMask::EMPTY), 0);
        assert_eq!(rep.rank_of_columns(SubsetMask::from_indices([0])), 1);
        let rm = LinearCode::reed_muller(1, 3).unwrap();
        assert_eq!(rm.rank_of_columns(SubsetMask::full(8)), 4);
    }

    #[test]
    fn scaled_indicator_examples() {
        let full = LinearCode::full_space(3).unwrap().scaled_indicator().unwrap();
        assert_eq!(full.values(), &[1.0; 8]);
        let zero = LinearCode::zero_code(3).unwrap().scaled_indicator().unwrap();
        assert_eq!(zero.get(0), 8.0);
        assert!(wht_forward(&zero).coeffs().iter().all(|&c| c == 1.0));
        let rep = LinearCode::repetition(2).unwrap().scaled_indicator().unwrap();
        assert_eq!(rep.values(), &[2.0, 0.0, 0.0, 2.0]);
        assert_eq!(wht_forward(&rep).coeffs(), &[1.0, 0.0, 0.0, 1.0]);
    }
}
