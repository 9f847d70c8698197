use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the cube, code and matroid computations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("cube dimension {n} exceeds the configured cap {cap}")]
    DimensionOverCap { n: usize, cap: usize },

    #[error("expected {expected} values for a cube of dimension {n}, got {got}")]
    LengthMismatch { n: usize, expected: usize, got: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("noise parameter {0} is outside [0, 1/2]")]
    NoiseOutOfRange(f64),

    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(f64),

    #[error("norm exponent q = {0} is not allowed here")]
    InvalidExponent(f64),

    #[error("function is identically zero")]
    ZeroFunction,

    #[error("function has a negative or non-finite value {value} at point {index}")]
    NegativeValue { index: usize, value: f64 },

    #[error("function is not normalized (mean {mean}, expected 1)")]
    Unnormalized { mean: f64 },

    #[error("function is constant; the derivative comparison does not apply")]
    ConstantFunction,

    #[error("subset mask {mask:#x} is not contained in a ground set of size {n}")]
    SubsetOutOfRange { mask: u64, n: usize },

    #[error("{what}: size {n} exceeds the exact-enumeration cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("matrix has {got} columns; at most 64 are supported")]
    TooManyColumns { got: usize },

    #[error("generator rows are linearly dependent (rank {rank} < {rows} rows)")]
    DependentRows { rank: usize, rows: usize },

    #[error("invalid Reed-Muller parameters r = {r}, m = {m}")]
    InvalidReedMuller { r: usize, m: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("MacWilliams transform produced a non-integral or invalid coefficient at weight {weight}")]
    NonIntegralTransform { weight: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{path}: {msg}")]
    Io { path: PathBuf, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
