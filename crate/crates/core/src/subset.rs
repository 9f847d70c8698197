use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of the coordinates `1..=n`, stored as a bitmask where bit `i`
/// stands for coordinate `i + 1`.
///
/// The same convention indexes cube points: point `x` has index `Σ x_i 2^(i-1)`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The full set `[n]`. `n` may be 64.
    pub fn full(n: usize) -> SubsetMask {
        SubsetMask(full_bits(n))
    }

    pub fn singleton(i: usize) -> SubsetMask {
        SubsetMask(1 << i)
    }

    /// Builds a mask from zero-based coordinate indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> SubsetMask {
        SubsetMask(indices.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    /// Checks the mask against a ground set of size `n`.
    pub fn checked(bits: u64, n: usize) -> Result<SubsetMask> {
        if bits & !full_bits(n) != 0 {
            return Err(Error::SubsetOutOfRange { mask: bits, n });
        }
        Ok(SubsetMask(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    /// Complement inside `[n]`.
    pub fn complement(self, n: usize) -> SubsetMask {
        SubsetMask(!self.0 & full_bits(n))
    }

    /// Zero-based indices of the members, in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Every subset of `[n]`, in increasing bitmask order. Requires `n < 64`.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        assert!(n < 64, "cannot enumerate subsets of a 64-element ground set");
        (0..1u64 << n).map(SubsetMask)
    }
}

pub(crate) fn full_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, i) in self.indices().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement() {
        assert_eq!(SubsetMask::full(3).bits(), 0b111);
        assert_eq!(SubsetMask::full(64).bits(), u64::MAX);
        assert_eq!(SubsetMask(0b101).complement(3), SubsetMask(0b010));
    }

    #[test]
    fn checked_rejects_outside_bits() {
        assert!(SubsetMask::checked(0b1000, 3).is_err());
        assert!(SubsetMask::checked(0b111, 3).is_ok());
    }

    #[test]
    fn indices_and_debug() {
        let s = SubsetMask::from_indices([0, 2, 5]);
        assert_eq!(s.indices().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(format!("{s:?}"), "{1,3,6}");
        assert_eq!(s.len(), 3);
    }
}
