//! Evidence-based support intervals from an estimate and its standard error.
//!
//! A k support interval collects the null values θ₀ whose Bayes factor
//! BF₀₁(θ̂; θ₀) is at least k. Under a normal likelihood every interval
//! type reduces to θ̂ ± σ·M for a multiplier M, which makes intervals of
//! different types, including ordinary confidence intervals, directly
//! convertible into each other.

pub mod bayes_factors;
pub mod calibration;
pub mod coverage;
pub mod design;
pub mod error;
pub mod intervals;
pub mod model;
pub mod numerics;

pub use error::{Error, Result};
pub use model::{
    summary_from_ci, EffectiveSample, IntervalKind, IntervalMethod, MinBfFamily, PriorSpec,
    RealInterval, SummaryData,
};
