//! Mapping between confidence levels and minimum support levels, and
//! conversion of an interval of one type into another.
//!
//! Every interval is θ̂ ± σ·M, so converting type A into type B rescales
//! the half-widths by M_B/M_A around θ̂.

use crate::error::{Error, Result};
use crate::intervals::{compute_interval, multiplier, IntervalResult};
use crate::model::{
    check_k, ci_multiplier, IntervalMethod, MinBfFamily, RealInterval, SummaryData,
};
use crate::numerics::norm_cdf;

/// Minimum support level whose interval coincides with the `level`
/// confidence interval.
pub fn ci_level_to_min_support(level: f64, family: MinBfFamily) -> Result<f64> {
    let z = ci_multiplier(level)?;
    match family {
        MinBfFamily::AllPriors => Ok((-0.5 * z * z).exp()),
        MinBfFamily::LocalNormalClass => {
            if z < 1.0 {
                return Err(Error::MappingUndefined {
                    family,
                    level,
                    reason: "the local normal minimum Bayes factor equals 1 within one standard error (needs level >= 2Φ(1) − 1 ≈ 0.6827)",
                });
            }
            Ok(z * (0.5 * (1.0 - z * z)).exp())
        }
        MinBfFamily::EpLogP => {
            let p = 1.0 - level;
            if p > (-1.0f64).exp() {
                return Err(Error::MappingUndefined {
                    family,
                    level,
                    reason:
                        "the -ep log p bound equals 1 for p > 1/e (needs level >= 1 − 1/e ≈ 0.6321)",
                });
            }
            Ok(-std::f64::consts::E * p * p.ln())
        }
    }
}

/// Confidence level `2Φ(M_k) − 1` of the k minimum support interval.
pub fn min_support_to_ci_level(k: f64, family: MinBfFamily) -> Result<f64> {
    check_k(k)?;
    let method = IntervalMethod::MinSupportInterval { k, family };
    // SummaryData does not enter minimum support multipliers
    let unit = SummaryData::new(0.0, 1.0)?;
    let m = multiplier(&method, &unit)?
        .value
        .expect("minimum support multipliers exist for k <= 1");
    Ok(1.0 - 2.0 * norm_cdf(-m))
}

/// Rescale `interval`, computed with `from`, into the interval for `to`.
///
/// The input must agree with `from` applied to `data` to within 1e-6·σ at
/// each endpoint. A target that does not exist yields an empty interval
/// with the failed existence condition attached.
pub fn transform_interval(
    interval: &RealInterval,
    from: &IntervalMethod,
    to: &IntervalMethod,
    data: &SummaryData,
) -> Result<IntervalResult> {
    let source = compute_interval(data, from)?;
    let (lower, upper) = interval
        .endpoints()
        .ok_or_else(|| Error::InvalidInput("an empty interval cannot be transformed".into()))?;
    let (exp_lower, exp_upper) = source.interval.endpoints().ok_or_else(|| {
        Error::InvalidInput("the source interval does not exist for these data".into())
    })?;
    let tol = 1e-6 * data.se();
    if (lower - exp_lower).abs() > tol || (upper - exp_upper).abs() > tol {
        return Err(Error::Inconsistent {
            lower,
            upper,
            expected_lower: exp_lower,
            expected_upper: exp_upper,
        });
    }
    if from == to {
        return Ok(IntervalResult {
            interval: *interval,
            multiplier: source.multiplier,
        });
    }

    let target = multiplier(to, data)?;
    let m_from = source.multiplier.value.unwrap_or(0.0);
    let interval = match target.value {
        None => RealInterval::Empty,
        // a point carries no width to rescale
        Some(m_to) if m_from == 0.0 || m_to == 0.0 => {
            RealInterval::symmetric(data.estimate(), data.se() * m_to)
        }
        Some(m_to) => {
            let ratio = m_to / m_from;
            let center = data.estimate();
            RealInterval::Bounded {
                lower: center + (lower - center) * ratio,
                upper: center + (upper - center) * ratio,
            }
        }
    };
    Ok(IntervalResult {
        interval,
        multiplier: target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{summary_from_ci, PriorSpec};

    #[test]
    fn ninety_five_percent_levels() {
        let all = ci_level_to_min_support(0.95, MinBfFamily::AllPriors).unwrap();
        assert!((all - 0.1465).abs() < 5e-4);
        assert!((1.0 / all - 6.8).abs() < 0.05);
        let ep = ci_level_to_min_support(0.95, MinBfFamily::EpLogP).unwrap();
        assert!((ep - 0.4072).abs() < 5e-4);
        let ln = ci_level_to_min_support(0.95, MinBfFamily::LocalNormalClass).unwrap();
        assert!((ln - 0.4734).abs() < 5e-4);
    }

    #[test]
    fn one_in_ten_levels() {
        let cases = [
            (MinBfFamily::AllPriors, 0.9681),
            (MinBfFamily::EpLogP, 0.9925),
            (MinBfFamily::LocalNormalClass, 0.9943),
        ];
        for (family, expected) in cases {
            let level = min_support_to_ci_level(0.1, family).unwrap();
            assert!((level - expected).abs() < 1e-4, "{family:?}: {level}");
        }
        assert_eq!(
            min_support_to_ci_level(1.0, MinBfFamily::AllPriors).unwrap(),
            0.0
        );
    }

    #[test]
    fn undefined_mappings() {
        assert!(matches!(
            ci_level_to_min_support(0.5, MinBfFamily::EpLogP),
            Err(Error::MappingUndefined { .. })
        ));
        assert!(matches!(
            ci_level_to_min_support(0.6, MinBfFamily::LocalNormalClass),
            Err(Error::MappingUndefined { .. })
        ));
        assert!(ci_level_to_min_support(0.5, MinBfFamily::AllPriors).is_ok());
        assert_eq!(
            min_support_to_ci_level(2.0, MinBfFamily::EpLogP),
            Err(Error::UnsupportedLevel { k: 2.0 })
        );
    }

    #[test]
    fn transform_recovery_ci_to_normal_si() {
        let data = summary_from_ci(-0.29, -0.07, 0.95).unwrap();
        let ci = IntervalMethod::ConfidenceInterval { level: 0.95 };
        let si = IntervalMethod::SupportInterval {
            k: 10.0,
            prior: PriorSpec::Normal { mean: 0.0, sd: 2.0 },
        };
        let input = RealInterval::Bounded {
            lower: -0.29,
            upper: -0.07,
        };
        let out = transform_interval(&input, &ci, &si, &data).unwrap();
        let (lo, hi) = out.interval.endpoints().unwrap();
        assert_eq!(
            ((lo * 100.0).round() / 100.0, (hi * 100.0).round() / 100.0),
            (-0.27, -0.09)
        );
    }

    #[test]
    fn transform_fixed_point_of_the_mapping() {
        let data = summary_from_ci(-0.29, -0.07, 0.95).unwrap();
        let ci = IntervalMethod::ConfidenceInterval { level: 0.95 };
        let k = ci_level_to_min_support(0.95, MinBfFamily::AllPriors).unwrap();
        let min_si = IntervalMethod::MinSupportInterval {
            k,
            family: MinBfFamily::AllPriors,
        };
        let input = RealInterval::Bounded {
            lower: -0.29,
            upper: -0.07,
        };
        let out = transform_interval(&input, &ci, &min_si, &data).unwrap();
        let (lo, hi) = out.interval.endpoints().unwrap();
        assert!((lo + 0.29).abs() < 1e-12 && (hi + 0.07).abs() < 1e-12);
        assert_eq!(
            transform_interval(&input, &ci, &ci, &data)
                .unwrap()
                .interval,
            input
        );
    }

    #[test]
    fn transform_rejects_mismatched_input_and_reports_missing_target() {
        let data = SummaryData::new(0.0, 1.0).unwrap();
        let ci = IntervalMethod::ConfidenceInterval { level: 0.95 };
        let wrong = RealInterval::Bounded {
            lower: -1.0,
            upper: 1.0,
        };
        assert!(matches!(
            transform_interval(&wrong, &ci, &ci, &data),
            Err(Error::Inconsistent { .. })
        ));
        let input = RealInterval::Bounded {
            lower: -1.959_963_984_540_054,
            upper: 1.959_963_984_540_054,
        };
        let impossible = IntervalMethod::SupportInterval {
            k: 10.0,
            prior: PriorSpec::Normal { mean: 0.0, sd: 1.0 },
        };
        let out = transform_interval(&input, &ci, &impossible, &data).unwrap();
        assert_eq!(out.interval, RealInterval::Empty);
        assert!(!out.multiplier.satisfied);
    }
}
