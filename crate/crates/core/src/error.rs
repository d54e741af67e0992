use thiserror::Error;

use crate::model::MinBfFamily;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{func}: argument {x} is outside the domain {domain}")]
    Domain {
        func: &'static str,
        x: f64,
        domain: &'static str,
    },

    #[error("no sign change over the bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("function evaluated to a non-finite value at x = {x}")]
    NonFinite { x: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate interval: lower bound {lower} must be below upper bound {upper}")]
    DegenerateInterval { lower: f64, upper: f64 },

    #[error("minimum support intervals only exist for k <= 1 (got k = {k})")]
    UnsupportedLevel { k: f64 },

    #[error("no {family} minimum support level corresponds to confidence level {level}: {reason}")]
    MappingUndefined {
        family: MinBfFamily,
        level: f64,
        reason: &'static str,
    },

    #[error("unsupported method: {0}")]
    UnsupportedMethod(String),

    #[error("interval [{lower}, {upper}] does not match the source method applied to the data (expected [{expected_lower}, {expected_upper}])")]
    Inconsistent {
        lower: f64,
        upper: f64,
        expected_lower: f64,
        expected_upper: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
