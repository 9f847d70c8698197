//! Gap records emitted by every inequality verifier, and the CSV / JSON
//! writers shared by the CLI.

use std::fmt;
use std::io::Write;

use serde::{Serialize, Serializer};

use crate::inequalities::SubsetMode;

/// Version tag written in the comment line above every CSV table.
pub const CSV_VERSION: &str = "cubenoise-csv v1";

/// Relative equality tolerance: `|gap| ≤ EQUALITY_TOL · max(1, |lhs|)`.
pub const EQUALITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InequalityId {
    /// `ln ‖f_ε‖_q ≤ E_{T~λ} ln ‖E(f|T)‖_q`.
    Main,
    /// `Ent(f_ε) ≤ E_{T~(1-2ε)²} Ent(E(f|T))`.
    NoisyEntropy,
    /// `‖f_ε‖_q ≤ ‖f‖_{1+(q-1)(1-2ε)²}`.
    Hypercontractive,
    LogSobolev,
    TwoPoint,
    /// `F'(f,0) < G'(f,0)`.
    Derivative,
    /// `F(λ,q) ≤ λn − E_{T~λ} r_C(T)`.
    RankDeficiency,
    /// Dual weight `b_i` against its rank-deficiency bound.
    DualWeight,
    /// `log₂ E_{S~p} 2^{|S|-r(S)} ≤ E_{T~t}(|T| - r(T))`.
    Lemma17,
    /// The same claim, both sides evaluated through the Tutte polynomial.
    TutteLemma17,
    TailBound,
    /// `log₂ E_{S~p} 2^{|S|+c(S)} ≤ t|E| + E_{T~t} c(T)`.
    GraphComponents,
}

impl InequalityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            InequalityId::Main => "main",
            InequalityId::NoisyEntropy => "noisy-entropy",
            InequalityId::Hypercontractive => "hypercontractive",
            InequalityId::LogSobolev => "log-sobolev",
            InequalityId::TwoPoint => "two-point",
            InequalityId::Derivative => "derivative",
            InequalityId::RankDeficiency => "rank-deficiency",
            InequalityId::DualWeight => "dual-weight",
            InequalityId::Lemma17 => "lemma17",
            InequalityId::TutteLemma17 => "tutte-lemma17",
            InequalityId::TailBound => "tail-bound",
            InequalityId::GraphComponents => "graph-components",
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeTag {
    Exact,
    Mc,
}

/// One evaluated instance of a claim `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    #[serde(rename = "inequality-id")]
    pub id: InequalityId,
    pub n: usize,
    #[serde(serialize_with = "ser_opt_float")]
    pub q: Option<f64>,
    #[serde(rename = "eps-or-lambda", serialize_with = "ser_opt_float")]
    pub param: Option<f64>,
    #[serde(serialize_with = "ser_float")]
    pub lhs: f64,
    #[serde(serialize_with = "ser_float")]
    pub rhs: f64,
    /// `rhs − lhs`.
    #[serde(serialize_with = "ser_float")]
    pub gap: f64,
    pub mode: ModeTag,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    /// Whether `|gap|` is within the equality tolerance.
    pub equality: bool,
}

impl GapReport {
    pub fn new(id: InequalityId, n: usize, lhs: f64, rhs: f64) -> Self {
        let gap = rhs - lhs;
        GapReport {
            id,
            n,
            q: None,
            param: None,
            lhs,
            rhs,
            gap,
            mode: ModeTag::Exact,
            samples: None,
            seed: None,
            equality: gap.abs() <= EQUALITY_TOL * lhs.abs().max(1.0),
        }
    }

    pub fn with_q(mut self, q: f64) -> Self {
        self.q = Some(q);
        self
    }

    pub fn with_param(mut self, param: f64) -> Self {
        self.param = Some(param);
        self
    }

    pub fn with_mode(mut self, mode: &SubsetMode) -> Self {
        if let SubsetMode::MonteCarlo { samples, seed } = *mode {
            self.mode = ModeTag::Mc;
            self.samples = Some(samples);
            self.seed = Some(seed);
        }
        self
    }

    /// `gap ≥ −tol · max(1, |lhs|, |rhs|)`.
    pub fn holds(&self, tol: f64) -> bool {
        self.gap >= -tol * self.lhs.abs().max(self.rhs.abs()).max(1.0)
    }
}

fn ser_float<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else if v.is_nan() {
        s.serialize_str("nan")
    } else if *v > 0.0 {
        s.serialize_str("inf")
    } else {
        s.serialize_str("-inf")
    }
}

fn ser_opt_float<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_float(v, s),
        None => s.serialize_none(),
    }
}

/// Serializes a float field that may be infinite; JSON has no literal for it.
pub fn serialize_float<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    ser_float(v, s)
}

pub fn serialize_opt_float<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    ser_opt_float(v, s)
}

/// Writes a titled CSV table: a version comment line, a header row and one row per record.
pub fn write_csv_table<T: Serialize, W: Write>(
    out: &mut W,
    table: &str,
    rows: &[T],
) -> std::io::Result<()> {
    writeln!(out, "# {CSV_VERSION} table={table}")?;
    let mut writer = csv::WriterBuilder::new().has_headers(true).from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).map_err(std::io::Error::other)?;
    }
    let bytes = writer.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
    out.write_all(&bytes)
}
