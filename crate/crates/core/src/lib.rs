//! Noise-operator norm inequalities on the boolean cube, checked numerically,
//! together with their consequences for binary linear codes and binary
//! matroids.
//!
//! Everything is pure: functions take their inputs by reference and return
//! fresh values, so results can be shared across threads freely.

pub mod cli;
pub mod codes;
pub mod config;
pub mod cube;
pub mod error;
pub mod fuzz;
pub mod gf2;
pub mod inequalities;
pub mod matroids;
pub mod report;
pub mod subset;

pub use config::Caps;
pub use cube::{CubeFunction, FourierSpectrum};
pub use error::{Error, Result};
pub use report::{GapReport, InequalityId};
pub use subset::SubsetMask;
