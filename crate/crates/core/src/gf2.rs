//! Dense GF(2) matrices with at most 64 columns, one machine word per row.
//!
//! Column `j` (coordinate `j + 1`) is bit `j` of each row word.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::subset::{full_bits, SubsetMask};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<u64>,
}

impl BitMatrix {
    pub fn new(cols: usize, rows: Vec<u64>) -> Result<Self> {
        if cols > 64 {
            return Err(Error::TooManyColumns { got: cols });
        }
        let mask = full_bits(cols);
        if let Some(bad) = rows.iter().find(|&&r| r & !mask != 0) {
            return Err(Error::InvalidParameter(format!(
                "row {bad:#x} has bits beyond column {cols}"
            )));
        }
        Ok(BitMatrix { cols, rows })
    }

    pub fn zero(rows: usize, cols: usize) -> Result<Self> {
        Self::new(cols, vec![0; rows])
    }

    pub fn identity(size: usize) -> Result<Self> {
        Self::new(size, (0..size).map(|i| 1u64 << i).collect())
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row] >> col & 1 == 1
    }

    /// Column `col` as a bit vector over the rows (rows beyond 64 are not representable).
    pub fn column(&self, col: usize) -> Vec<bool> {
        self.rows.iter().map(|r| r >> col & 1 == 1).collect()
    }

    pub fn rank(&self) -> usize {
        rank_of_words(self.rows.iter().copied())
    }

    /// Rank of the column submatrix selected by `cols`.
    pub fn rank_of_columns(&self, cols: SubsetMask) -> usize {
        rank_of_words(self.rows.iter().map(|r| r & cols.bits()))
    }

    /// Reduced row echelon form with pivots on the lowest set bit of each
    /// row. Returns the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Vec<u64>, Vec<usize>) {
        let mut rows: Vec<u64> = self.rows.iter().copied().filter(|&r| r != 0).collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..self.cols {
            let bit = 1u64 << col;
            let Some(found) = (top..rows.len()).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(top, found);
            let pivot_row = rows[top];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != top && *row & bit != 0 {
                    *row ^= pivot_row;
                }
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        (rows, pivots)
    }

    /// A basis of `{v : ⟨row, v⟩ = 0 for every row}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<u64> {
        let (rows, pivots) = self.rref();
        let pivot_mask = pivots.iter().fold(0u64, |m, &c| m | 1 << c);
        (0..self.cols)
            .filter(|c| pivot_mask >> c & 1 == 0)
            .map(|free| {
                let mut v = 1u64 << free;
                for (row, &p) in rows.iter().zip(&pivots) {
                    if row >> free & 1 == 1 {
                        v |= 1 << p;
                    }
                }
                v
            })
            .collect()
    }

    /// Whether `v` lies in the row space.
    pub fn spans(&self, v: u64) -> bool {
        let (rows, pivots) = self.rref();
        let mut rest = v;
        for (row, &p) in rows.iter().zip(&pivots) {
            if rest >> p & 1 == 1 {
                rest ^= row;
            }
        }
        rest == 0
    }

    /// Same row space.
    pub fn same_row_space(&self, other: &BitMatrix) -> bool {
        self.cols == other.cols && self.rref().0 == other.rref().0
    }

    /// `k n` on the first line, then one line of `n` characters from `{0,1}` per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows.len(), self.cols);
        for r in &self.rows {
            for c in 0..self.cols {
                out.push(if r >> c & 1 == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse { line, msg: format!("bad size {t:?}") }))
            .collect::<Result<_>>()?;
        let [k, n] = dims[..] else {
            return Err(Error::Parse { line, msg: "expected `k n`".into() });
        };
        if n > 64 {
            return Err(Error::TooManyColumns { got: n });
        }
        let mut rows = Vec::with_capacity(k);
        for (line, l) in lines {
            let bits: String = l.chars().filter(|c| !c.is_whitespace()).collect();
            if bits.len() != n {
                return Err(Error::Parse { line, msg: format!("expected {n} bits, got {}", bits.len()) });
            }
            let mut word = 0u64;
            for (j, ch) in bits.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => word |= 1 << j,
                    other => return Err(Error::Parse { line, msg: format!("unexpected character {other:?}") }),
                }
            }
            rows.push(word);
        }
        if rows.len() != k {
            return Err(Error::Parse { line: text.lines().count(), msg: format!("expected {k} rows, got {}", rows.len()) });
        }
        Self::new(n, rows)
    }
}

/// `counts[j][r]` = number of column subsets `S` with `|S| = j` and rank `r`.
///
/// Built by a depth-first walk over the columns that keeps an XOR basis of
/// the chosen column vectors, so each subset costs one insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    n: usize,
    rank: usize,
    counts: Vec<Vec<u64>>,
}

impl RankProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the full ground set.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    /// `(|S|, r(S), count)` for every nonzero entry.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.counts.iter().enumerate().flat_map(|(j, row)| {
            row.iter().enumerate().filter(|(_, &c)| c > 0).map(move |(r, &c)| (j, r, c))
        })
    }

    /// `E_{S~p} h(|S|, r(S))`.
    pub fn expect(&self, p: f64, h: impl Fn(usize, usize) -> f64) -> f64 {
        let weights: Vec<f64> =
            (0..=self.n).map(|j| p.powi(j as i32) * (1.0 - p).powi((self.n - j) as i32)).collect();
        self.entries()
            .map(|(j, r, c)| if weights[j] == 0.0 { 0.0 } else { weights[j] * c as f64 * h(j, r) })
            .sum()
    }
}

struct XorBasis {
    slots: [u64; 64],
}

impl XorBasis {
    /// Inserts `v`; returns the slot it occupied, or `None` if `v` was dependent.
    fn insert(&mut self, mut v: u64) -> Option<usize> {
        while v != 0 {
            let lead = 63 - v.leading_zeros() as usize;
            if self.slots[lead] == 0 {
                self.slots[lead] = v;
                return Some(lead);
            }
            v ^= self.slots[lead];
        }
        None
    }
}

fn profile_walk(columns: &[u64], basis: &mut XorBasis, size: usize, rank: usize, counts: &mut [Vec<u64>]) {
    let Some((&first, rest)) = columns.split_first() else {
        counts[size][rank] += 1;
        return;
    };
    profile_walk(rest, basis, size, rank, counts);
    match basis.insert(first) {
        Some(slot) => {
            profile_walk(rest, basis, size + 1, rank + 1, counts);
            basis.slots[slot] = 0;
        }
        None => profile_walk(rest, basis, size + 1, rank, counts),
    }
}

impl BitMatrix {
    /// Column vectors expressed over a basis of the row space (at most 64 rows).
    pub fn reduced_columns(&self) -> Vec<u64> {
        let (rows, _) = self.rref();
        (0..self.cols)
            .map(|c| rows.iter().enumerate().fold(0u64, |v, (i, r)| v | ((r >> c & 1) << i)))
            .collect()
    }

    /// Rank counts over all `2^n` column subsets, for `n ≤ cap`.
    pub fn rank_profile(&self, cap: usize) -> Result<RankProfile> {
        use rayon::prelude::*;

        let n = self.cols;
        if n > cap || n >= 64 {
            return Err(Error::CapExceeded { what: "rank profile", n, cap });
        }
        let columns = self.reduced_columns();
        let rank = self.rank();
        let empty = || vec![vec![0u64; n + 1]; n + 1];
        // Fan out over the choices for the first few columns.
        let split = if n >= 14 { 6.min(n) } else { 0 };
        let (head, tail) = columns.split_at(split);
        let counts = (0..1u64 << split)
            .into_par_iter()
            .map(|prefix| {
                let mut counts = empty();
                let mut basis = XorBasis { slots: [0; 64] };
                let mut size = 0;
                let mut r = 0;
                for (i, &col) in head.iter().enumerate() {
                    if prefix >> i & 1 == 1 {
                        size += 1;
                        if basis.insert(col).is_some() {
                            r += 1;
                        }
                    }
                }
                profile_walk(tail, &mut basis, size, r, &mut counts);
                counts
            })
            .reduce(empty, |mut acc, part| {
                for (a, p) in acc.iter_mut().zip(part) {
                    for (x, y) in a.iter_mut().zip(p) {
                        *x += y;
                    }
                }
                acc
            });
        Ok(RankProfile { n, rank, counts })
    }
}

/// Rank of a set of row words, via a basis keyed by leading bit.
pub fn rank_of_words(words: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in words {
        while v != 0 {
            let lead = 63 - v.leading_zeros() as usize;
            if basis[lead] == 0 {
                basis[lead] = v;
                rank += 1;
                break;
            }
            v ^= basis[lead];
        }
    }
    rank
}

/// Renders `bits` as `n` characters, column 1 first.
pub fn word_to_string(word: u64, n: usize) -> String {
    let mut s = String::with_capacity(n);
    for c in 0..n {
        write!(s, "{}", word >> c & 1).unwrap();
    }
    s
}
