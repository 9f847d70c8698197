use rayon::prelude::*;
use serde::Serialize;

use crate::config::Caps;
use crate::error::{Error, Result};

use super::code::{gray_walk, LinearCode};

/// Number of codewords of each Hamming weight, `a_0..a_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidParameter("weight distribution needs at least a_0".into()));
        }
        Ok(WeightDistribution { counts })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// `Σ_i a_i x^i`.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.counts.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }
}

/// Counts codeword weights over all `2^k` codewords, visited in Gray-code order.
pub fn weight_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    weight_distribution_with_caps(code, Caps::global())
}

pub fn weight_distribution_with_caps(code: &LinearCode, caps: &Caps) -> Result<WeightDistribution> {
    code.check_enumerable(caps)?;
    let n = code.n();
    let rows = code.generator().rows();
    // Split off a few leading rows and walk the rest per prefix in parallel.
    let split = if rows.len() >= 18 { 6 } else { 0 };
    let (head, tail) = rows.split_at(split);
    let counts = (0..1u64 << split)
        .into_par_iter()
        .map(|prefix| {
            let start = head.iter().enumerate().filter(|(i, _)| prefix >> i & 1 == 1).fold(0, |w, (_, r)| w ^ r);
            let mut counts = vec![0u64; n + 1];
            gray_walk(tail, start, &mut |w| counts[w.count_ones() as usize] += 1);
            counts
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    WeightDistribution::new(counts)
}

/// `C(n, k)` for `0 ≤ k ≤ n ≤ 64`.
pub(crate) fn binomial_table(n: usize) -> Vec<Vec<i128>> {
    let mut table = vec![vec![0i128; n + 1]; n + 1];
    for i in 0..=n {
        table[i][0] = 1;
        for j in 1..=i {
            table[i][j] = table[i - 1][j - 1] + if j < i { table[i - 1][j] } else { 0 };
        }
    }
    table
}

/// Krawtchouk polynomial `K_i(x) = Σ_j (−1)^j C(x, j) C(n−x, i−j)`.
pub fn krawtchouk(n: usize, i: usize, x: usize) -> i128 {
    let binom = binomial_table(n);
    krawtchouk_with(&binom, n, i, x)
}

fn krawtchouk_with(binom: &[Vec<i128>], n: usize, i: usize, x: usize) -> i128 {
    (0..=i.min(x))
        .filter(|&j| i - j <= n - x)
        .map(|j| {
            let term = binom[x][j] * binom[n - x][i - j];
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Dual weight distribution `b_i = (1/2^k) Σ_j a_j K_i(j)`, in exact integers.
pub fn macwilliams_transform(a: &WeightDistribution, n: usize, k: usize) -> Result<WeightDistribution> {
    if a.n() != n {
        return Err(Error::InvalidParameter(format!(
            "weight distribution has length {} but n = {n}",
            a.n()
        )));
    }
    if n > 64 || k > n {
        return Err(Error::InvalidParameter(format!("invalid code parameters n = {n}, k = {k}")));
    }
    if a.total() != 1u128 << k {
        return Err(Error::InvalidParameter(format!(
            "weight distribution sums to {} instead of 2^{k}",
            a.total()
        )));
    }
    let binom = binomial_table(n);
    let size = 1i128 << k;
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc: i128 = 0;
        for (x, &count) in a.counts().iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = (count as i128)
                .checked_mul(krawtchouk_with(&binom, n, i, x))
                .ok_or(Error::Overflow("MacWilliams transform"))?;
            acc = acc.checked_add(term).ok_or(Error::Overflow("MacWilliams transform"))?;
        }
        if acc < 0 || acc % size != 0 {
            return Err(Error::NonIntegralTransform { weight: i });
        }
        out.push(u64::try_from(acc / size).map_err(|_| Error::Overflow("MacWilliams transform"))?);
    }
    WeightDistribution::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_distributions() {
        let rep = LinearCode::repetition(2).unwrap();
        assert_eq!(weight_distribution(&rep).unwrap().counts(), &[1, 0, 1]);
        let rm13 = LinearCode::reed_muller(1, 3).unwrap();
        assert_eq!(weight_distribution(&rm13).unwrap().counts(), &[1, 0, 0, 0, 14, 0, 0, 0, 1]);
        let full = LinearCode::full_space(6).unwrap();
        assert_eq!(weight_distribution(&full).unwrap().counts(), &[1, 6, 15, 20, 15, 6, 1]);
    }

    #[test]
    fn parallel_split_agrees_with_serial_walk() {
        // k = 22 takes the parallel path.
        let rm = LinearCode::reed_muller(2, 6).unwrap();
        let a = weight_distribution(&rm).unwrap();
        assert_eq!(a.total(), 1 << 22);
        let mut serial = vec![0u64; 65];
        gray_walk(rm.generator().rows(), 0, &mut |w| serial[w.count_ones() as usize] += 1);
        assert_eq!(a.counts(), &serial[..]);
    }

    #[test]
    fn enumeration_cap() {
        let caps = Caps { code_dim: 3, ..Caps::default() };
        let rm = LinearCode::reed_muller(1, 3).unwrap();
        assert!(matches!(weight_distribution_with_caps(&rm, &caps), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn krawtchouk_values() {
        // K_1(x) = n − 2x
        for x in 0..=6 {
            assert_eq!(krawtchouk(6, 1, x), 6 - 2 * x as i128);
        }
        assert_eq!(krawtchouk(4, 0, 3), 1);
    }

    #[test]
    fn macwilliams_examples() {
        let full = WeightDistribution::new(vec![1, 4, 6, 4, 1]).unwrap();
        assert_eq!(macwilliams_transform(&full, 4, 4).unwrap().counts(), &[1, 0, 0, 0, 0]);
        let rep = WeightDistribution::new(vec![1, 0, 1]).unwrap();
        assert_eq!(macwilliams_transform(&rep, 2, 1).unwrap().counts(), &[1, 0, 1]);
    }

    #[test]
    fn macwilliams_rejects_bad_input() {
        // Three weight-1 words cannot form a linear code with 0.
        let bad = WeightDistribution::new(vec![1, 3, 0, 0]).unwrap();
        assert_eq!(macwilliams_transform(&bad, 3, 2), Err(Error::NonIntegralTransform { weight: 1 }));
        let wrong_total = WeightDistribution::new(vec![1, 1, 1]).unwrap();
        assert!(macwilliams_transform(&wrong_total, 2, 1).is_err());
    }
}
