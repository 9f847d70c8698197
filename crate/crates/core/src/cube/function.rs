use std::fmt::Write as _;
use std::str::FromStr;

use crate::config::Caps;
use crate::error::{Error, Result};

/// A real-valued function on `{0,1}^n`, stored as its `2^n` values.
///
/// Point `x` lives at index `Σ x_i 2^(i-1)`, so coordinate `i` is bit `i - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CubeFunction {
    n: usize,
    values: Vec<f64>,
}

impl CubeFunction {
    /// Builds a function under the default dimension cap.
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        Self::with_caps(n, values, Caps::global())
    }

    pub fn with_caps(n: usize, values: Vec<f64>, caps: &Caps) -> Result<Self> {
        if n > caps.cube_dim {
            return Err(Error::DimensionOverCap { n, cap: caps.cube_dim });
        }
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(Error::LengthMismatch { n, expected, got: values.len() });
        }
        Ok(CubeFunction { n, values })
    }

    pub(crate) fn from_parts(n: usize, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), 1 << n);
        CubeFunction { n, values }
    }

    pub fn constant(n: usize, c: f64) -> Result<Self> {
        Self::new(n, vec![c; checked_len(n)?])
    }

    /// Builds the function from a closure over point indices.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> f64) -> Result<Self> {
        let len = checked_len(n)?;
        Self::new(n, (0..len).map(f).collect())
    }

    /// The Walsh character `w_R(x) = (-1)^{Σ_{i∈R} x_i}`.
    pub fn character(n: usize, r: u64) -> Result<Self> {
        Self::from_fn(n, |x| if (x as u64 & r).count_ones().is_multiple_of(2) { 1.0 } else { -1.0 })
    }

    /// `2^n` at one point and zero elsewhere, so that the mean is 1.
    pub fn scaled_point(n: usize, point: usize) -> Result<Self> {
        let len = checked_len(n)?;
        if point >= len {
            return Err(Error::InvalidParameter(format!("point {point} outside a cube of dimension {n}")));
        }
        let mut values = vec![0.0; len];
        values[point] = len as f64;
        Self::new(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn get(&self, point: usize) -> f64 {
        self.values[point]
    }

    /// Uniform-measure expectation.
    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn scale(&self, c: f64) -> CubeFunction {
        self.map(|v| v * c)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> CubeFunction {
        CubeFunction { n: self.n, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn is_constant(&self) -> bool {
        let first = self.values[0];
        self.values.iter().all(|&v| v == first)
    }

    /// Rejects negative or non-finite values and the zero function.
    pub fn check_nonnegative(&self) -> Result<()> {
        for (index, &value) in self.values.iter().enumerate() {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(Error::NegativeValue { index, value });
            }
        }
        if self.values.iter().all(|&v| v == 0.0) {
            return Err(Error::ZeroFunction);
        }
        Ok(())
    }

    pub(crate) fn ensure_same_dim(&self, other: &CubeFunction) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Text form: the dimension on the first line, then the `2^n` values in index order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
        out
    }

    pub fn parse_with_caps(text: &str, caps: &Caps) -> Result<Self> {
        let mut tokens = text
            .lines()
            .enumerate()
            .flat_map(|(line, l)| l.split_whitespace().map(move |t| (line + 1, t)));
        let (line, first) = tokens.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::Parse { line, msg: format!("bad dimension {first:?}") })?;
        if n > caps.cube_dim {
            return Err(Error::DimensionOverCap { n, cap: caps.cube_dim });
        }
        let values = tokens
            .map(|(line, t)| {
                t.parse::<f64>()
                    .map_err(|_| Error::Parse { line, msg: format!("bad value {t:?}") })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::with_caps(n, values, caps)
    }
}

impl FromStr for CubeFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with_caps(s, Caps::global())
    }
}

fn checked_len(n: usize) -> Result<usize> {
    let cap = Caps::global().cube_dim;
    if n > cap {
        return Err(Error::DimensionOverCap { n, cap });
    }
    Ok(1 << n)
}
