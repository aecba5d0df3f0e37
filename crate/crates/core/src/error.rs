//! Error type shared by every module of the crate.
//!
//! Interval and knot numbers carried by the variants are 1-based, matching how
//! data points and subintervals are numbered in user-facing output.

use std::path::PathBuf;

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("knots must be strictly increasing (knot {index} is not greater than knot {})", index - 1)]
    NonIncreasingKnots { index: usize },

    #[error("length mismatch for {what}: expected {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("at least 3 data points are required, got {0}")]
    TooFewPoints(usize),

    #[error("{what} entry {index} is not finite")]
    NonFinite { what: &'static str, index: usize },

    #[error("signature entry {index} must be 0 or 1, got {value}")]
    InvalidSignatureBit { index: usize, value: u8 },

    #[error("scaling factor of interval {interval} is not contractive: |{lambda}| >= {bound}")]
    NonContractiveScaling {
        interval: usize,
        lambda: f64,
        bound: f64,
    },

    #[error("shape parameter {name} of interval {interval} is {value}, which leaves the denominator without a positivity guarantee")]
    NonPositiveDenominatorParam {
        interval: usize,
        name: &'static str,
        value: f64,
    },

    #[error("interval {interval} is out of range 1..={count}")]
    IndexOutOfRange { interval: usize, count: usize },

    #[error("angle {0} lies outside [0, pi/2]")]
    ThetaOutOfRange(f64),

    #[error("sampled function does not live on the expected grid: {0}")]
    GridMismatch(String),

    #[error("fixed-point iteration did not converge within {iterations} iterations (last change {last_change:e})")]
    NotConverged { iterations: usize, last_change: f64 },

    #[error("point {t} lies outside the interpolation domain [{start}, {end}]")]
    OutOfDomain { t: f64, start: f64, end: f64 },

    #[error("closed-form evaluation needs all scaling factors to be zero (interval {interval} has {lambda})")]
    NotClassical { interval: usize, lambda: f64 },

    #[error("positivity analysis needs strictly positive data (value {index} is {value})")]
    NonPositiveData { index: usize, value: f64 },

    #[error("scaling factor {lambda} of interval {interval} lies outside the positivity range [0, {bound})")]
    LambdaOutOfBounds {
        interval: usize,
        lambda: f64,
        bound: f64,
    },

    #[error("invalid evaluation settings: {0}")]
    InvalidSettings(String),

    #[error("{path}: {message}")]
    Config { path: String, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
