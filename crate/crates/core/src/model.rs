//! Domain types shared by the computation modules.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::norm_quantile;

/// Parameter estimate θ̂ with its standard error σ, the sufficient
/// statistics of an approximately normal likelihood.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummaryData {
    estimate: f64,
    se: f64,
}

impl SummaryData {
    pub fn new(estimate: f64, se: f64) -> Result<Self> {
        if !estimate.is_finite() {
            return Err(Error::InvalidInput(format!(
                "estimate must be finite, got {estimate}"
            )));
        }
        if !(se.is_finite() && se > 0.0) {
            return Err(Error::InvalidInput(format!(
                "standard error must be positive and finite, got {se}"
            )));
        }
        Ok(SummaryData { estimate, se })
    }

    pub fn estimate(&self) -> f64 {
        self.estimate
    }

    pub fn se(&self) -> f64 {
        self.se
    }

    /// Standardized distance `(θ̂ − θ₀)/σ`.
    pub fn z(&self, theta0: f64) -> f64 {
        (self.estimate - theta0) / self.se
    }

    /// The symmetric `level` confidence interval `θ̂ ± σ·Φ⁻¹((1 + level)/2)`.
    pub fn confidence_interval(&self, level: f64) -> Result<(f64, f64)> {
        let m = ci_multiplier(level)?;
        Ok((self.estimate - self.se * m, self.estimate + self.se * m))
    }
}

/// `Φ⁻¹((1 + level)/2)`, evaluated through the lower tail.
pub(crate) fn ci_multiplier(level: f64) -> Result<f64> {
    check_level(level)?;
    Ok(-norm_quantile(0.5 * (1.0 - level))?)
}

pub(crate) fn check_level(level: f64) -> Result<()> {
    if level > 0.0 && level < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "confidence level must lie in (0, 1), got {level}"
        )))
    }
}

/// Recover estimate and standard error from a symmetric confidence interval.
pub fn summary_from_ci(lower: f64, upper: f64, level: f64) -> Result<SummaryData> {
    if !(lower.is_finite() && upper.is_finite()) || lower >= upper {
        return Err(Error::DegenerateInterval { lower, upper });
    }
    let m = ci_multiplier(level)?;
    SummaryData::new(0.5 * (lower + upper), (upper - lower) / (2.0 * m))
}

/// Prior for θ under the alternative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum PriorSpec {
    /// N(mean, sd²), fixed across null values.
    Normal { mean: f64, sd: f64 },
    /// N(θ₀, sd²), centred on each tested null value.
    LocalNormal { sd: f64 },
    /// Normal moment prior with symmetry point θ₀ and the given scale.
    NonlocalNormalMoment { scale: f64 },
}

impl PriorSpec {
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!(
                    "prior {name} must be positive and finite, got {v}"
                )))
            }
        };
        match *self {
            PriorSpec::Normal { mean, sd } => {
                if !mean.is_finite() {
                    return Err(Error::InvalidInput(format!(
                        "prior mean must be finite, got {mean}"
                    )));
                }
                positive("sd", sd)
            }
            PriorSpec::LocalNormal { sd } => positive("sd", sd),
            PriorSpec::NonlocalNormalMoment { scale } => positive("scale", scale),
        }
    }
}

impl fmt::Display for PriorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PriorSpec::Normal { mean, sd } => write!(f, "normal prior (mean {mean}, sd {sd})"),
            PriorSpec::LocalNormal { sd } => write!(f, "local normal prior (sd {sd})"),
            PriorSpec::NonlocalNormalMoment { scale } => {
                write!(f, "nonlocal normal moment prior (scale {scale})")
            }
        }
    }
}

/// Class of alternatives over which a minimum Bayes factor is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinBfFamily {
    AllPriors,
    LocalNormalClass,
    EpLogP,
}

impl MinBfFamily {
    pub const ALL: [MinBfFamily; 3] = [
        MinBfFamily::AllPriors,
        MinBfFamily::LocalNormalClass,
        MinBfFamily::EpLogP,
    ];
}

impl fmt::Display for MinBfFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MinBfFamily::AllPriors => "all-priors",
            MinBfFamily::LocalNormalClass => "local-normal",
            MinBfFamily::EpLogP => "-ep log p",
        })
    }
}

/// One of the interval constructions, with its level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum IntervalMethod {
    ConfidenceInterval { level: f64 },
    SupportInterval { k: f64, prior: PriorSpec },
    MinSupportInterval { k: f64, family: MinBfFamily },
}

impl IntervalMethod {
    pub fn validate(&self) -> Result<()> {
        match *self {
            IntervalMethod::ConfidenceInterval { level } => check_level(level),
            IntervalMethod::SupportInterval { k, prior } => {
                check_k(k)?;
                prior.validate()
            }
            IntervalMethod::MinSupportInterval { k, .. } => {
                check_k(k)?;
                if k > 1.0 {
                    return Err(Error::UnsupportedLevel { k });
                }
                Ok(())
            }
        }
    }

    /// Support level `k`, or `None` for confidence intervals.
    pub fn k(&self) -> Option<f64> {
        match *self {
            IntervalMethod::ConfidenceInterval { .. } => None,
            IntervalMethod::SupportInterval { k, .. }
            | IntervalMethod::MinSupportInterval { k, .. } => Some(k),
        }
    }
}

pub(crate) fn check_k(k: f64) -> Result<()> {
    if k.is_finite() && k > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "support level k must be positive and finite, got {k}"
        )))
    }
}

/// A subset of the real line: empty, a single point, a bounded interval,
/// or everything.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RealInterval {
    Empty,
    Point { at: f64 },
    Bounded { lower: f64, upper: f64 },
    WholeLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalKind {
    Empty,
    Point,
    Bounded,
    WholeLine,
}

impl fmt::Display for IntervalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntervalKind::Empty => "empty",
            IntervalKind::Point => "point",
            IntervalKind::Bounded => "bounded",
            IntervalKind::WholeLine => "whole_line",
        })
    }
}

impl RealInterval {
    /// `center ± halfwidth`, collapsing to a point when `halfwidth == 0`.
    pub fn symmetric(center: f64, halfwidth: f64) -> Self {
        if halfwidth == 0.0 {
            RealInterval::Point { at: center }
        } else if halfwidth == f64::INFINITY {
            RealInterval::WholeLine
        } else {
            RealInterval::Bounded {
                lower: center - halfwidth,
                upper: center + halfwidth,
            }
        }
    }

    pub fn kind(&self) -> IntervalKind {
        match self {
            RealInterval::Empty => IntervalKind::Empty,
            RealInterval::Point { .. } => IntervalKind::Point,
            RealInterval::Bounded { .. } => IntervalKind::Bounded,
            RealInterval::WholeLine => IntervalKind::WholeLine,
        }
    }

    /// Endpoints, with infinities for the whole line and `None` when empty.
    pub fn endpoints(&self) -> Option<(f64, f64)> {
        match *self {
            RealInterval::Empty => None,
            RealInterval::Point { at } => Some((at, at)),
            RealInterval::Bounded { lower, upper } => Some((lower, upper)),
            RealInterval::WholeLine => Some((f64::NEG_INFINITY, f64::INFINITY)),
        }
    }

    pub fn lower(&self) -> Option<f64> {
        self.endpoints().map(|e| e.0)
    }

    pub fn upper(&self) -> Option<f64> {
        self.endpoints().map(|e| e.1)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.endpoints().is_some_and(|(lo, hi)| lo <= x && x <= hi)
    }

    /// Whether `self ⊆ other`.
    pub fn is_subset_of(&self, other: &RealInterval) -> bool {
        match (self.endpoints(), other.endpoints()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((a, b)), Some((c, d))) => c <= a && b <= d,
        }
    }

    pub fn width(&self) -> f64 {
        self.endpoints().map_or(0.0, |(lo, hi)| hi - lo)
    }
}

/// Effective sample size n and unit variance λ², with σ = λ/√n.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EffectiveSample {
    n: f64,
    unit_var: f64,
}

impl EffectiveSample {
    pub fn new(n: f64, unit_var: f64) -> Result<Self> {
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::InvalidInput(format!(
                "effective sample size must be positive, got {n}"
            )));
        }
        if !(unit_var.is_finite() && unit_var > 0.0) {
            return Err(Error::InvalidInput(format!(
                "unit variance must be positive, got {unit_var}"
            )));
        }
        Ok(EffectiveSample { n, unit_var })
    }

    /// Unit variance implied by a standard error at sample size `n`.
    pub fn from_se(n: f64, se: f64) -> Result<Self> {
        Self::new(n, se * se * n)
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    pub fn unit_var(&self) -> f64 {
        self.unit_var
    }

    pub fn se(&self) -> f64 {
        (self.unit_var / self.n).sqrt()
    }

    pub fn is_consistent_with(&self, se: f64, rel_tol: f64) -> bool {
        (self.se() - se).abs() <= rel_tol * se.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovery_ci_inversion() {
        let d = summary_from_ci(-0.29, -0.07, 0.95).unwrap();
        assert!((d.estimate() + 0.18).abs() < 1e-15);
        assert!((d.se() - 0.0561).abs() < 5e-5);
    }

    #[test]
    fn unit_normal_ci() {
        let d = summary_from_ci(-1.96, 1.96, 0.95).unwrap();
        assert_eq!(d.estimate(), 0.0);
        assert!((d.se() - 1.0).abs() < 5e-5);
    }

    #[test]
    fn fifty_percent_ci() {
        // 1/Φ⁻¹(0.75), Φ⁻¹(0.75) = 0.6744897501960817
        let d = summary_from_ci(0.0, 2.0, 0.5).unwrap();
        assert_eq!(d.estimate(), 1.0);
        assert!((d.se() - 1.482_602_218_505_602).abs() < 1e-12);
    }

    #[test]
    fn ci_inversion_errors() {
        assert!(matches!(
            summary_from_ci(1.0, 1.0, 0.95),
            Err(Error::DegenerateInterval { .. })
        ));
        assert!(matches!(
            summary_from_ci(2.0, 1.0, 0.95),
            Err(Error::DegenerateInterval { .. })
        ));
        assert!(summary_from_ci(0.0, 1.0, 1.0).is_err());
        assert!(summary_from_ci(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn type_invariants() {
        assert!(SummaryData::new(0.0, 0.0).is_err());
        assert!(SummaryData::new(f64::NAN, 1.0).is_err());
        assert!(PriorSpec::Normal {
            mean: 0.0,
            sd: -1.0
        }
        .validate()
        .is_err());
        assert!(PriorSpec::LocalNormal { sd: 0.0 }.validate().is_err());
        assert!(PriorSpec::NonlocalNormalMoment {
            scale: f64::INFINITY
        }
        .validate()
        .is_err());
        assert_eq!(
            IntervalMethod::MinSupportInterval {
                k: 2.0,
                family: MinBfFamily::AllPriors
            }
            .validate(),
            Err(Error::UnsupportedLevel { k: 2.0 })
        );
        assert!(IntervalMethod::ConfidenceInterval { level: 1.0 }
            .validate()
            .is_err());
        assert!(EffectiveSample::new(0.0, 1.0).is_err());
    }

    #[test]
    fn interval_helpers() {
        assert_eq!(
            RealInterval::symmetric(1.0, 0.0),
            RealInterval::Point { at: 1.0 }
        );
        let b = RealInterval::symmetric(0.0, 2.0);
        assert!(b.contains(2.0) && !b.contains(2.1));
        assert!(RealInterval::Empty.is_subset_of(&b));
        assert!(!RealInterval::WholeLine.is_subset_of(&b));
        assert!(b.is_subset_of(&RealInterval::WholeLine));
        assert_eq!(RealInterval::Empty.lower(), None);
        assert_eq!(RealInterval::WholeLine.upper(), Some(f64::INFINITY));
    }

    #[test]
    fn effective_sample() {
        let s = EffectiveSample::new(100.0, 4.0).unwrap();
        assert!((s.se() - 0.2).abs() < 1e-15);
        assert!(s.is_consistent_with(0.2, 1e-12));
        let t = EffectiveSample::from_se(25.0, 0.2).unwrap();
        assert!((t.unit_var() - 1.0).abs() < 1e-12);
    }
}
