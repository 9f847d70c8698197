use std::sync::OnceLock;

use crate::config::Caps;
use crate::error::Result;
use crate::gf2::{BitMatrix, RankProfile};
use crate::subset::SubsetMask;

/// Matroid on the columns of a GF(2) matrix. Zero columns are loops.
#[derive(Debug, Clone)]
pub struct BinaryMatroid {
    matrix: BitMatrix,
    rank: usize,
    profile: OnceLock<RankProfile>,
}

impl PartialEq for BinaryMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl BinaryMatroid {
    pub fn new(matrix: BitMatrix) -> Self {
        let rank = matrix.rank();
        BinaryMatroid { matrix, rank, profile: OnceLock::new() }
    }

    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Self> {
        Ok(Self::new(BitMatrix::new(n, rows)?))
    }

    /// Same text format as code generators; rows need not be independent.
    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::new(BitMatrix::parse(text)?))
    }

    /// `n` coloops.
    pub fn free(n: usize) -> Result<Self> {
        Ok(Self::new(BitMatrix::identity(n)?))
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    /// Rank of the ground set.
    pub fn k(&self) -> usize {
        self.rank
    }

    /// Rank counts over all subsets, computed on first use.
    pub fn profile(&self) -> Result<&RankProfile> {
        if let Some(p) = self.profile.get() {
            return Ok(p);
        }
        let caps = Caps::global();
        let p = self.matrix.rank_profile(caps.tutte.max(caps.exact_subsets))?;
        Ok(self.profile.get_or_init(|| p))
    }
}

/// GF(2) rank of the columns in `s`; bits beyond the ground set are ignored.
pub fn matroid_rank(m: &BinaryMatroid, s: SubsetMask) -> usize {
    m.matrix.rank_of_columns(s)
}
