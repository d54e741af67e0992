//! Bayes factors BF₀₁(θ̂; θ₀) for a point null θ = θ₀ under the normal
//! likelihood θ̂ | θ ~ N(θ, σ²), together with the minimum Bayes factors
//! over classes of alternatives.
//!
//! All evaluators compute on the log scale and exponentiate last, so
//! standardized distances of several hundred stay finite on the log scale
//! and underflow gracefully to zero only at the very end.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{IntervalMethod, MinBfFamily, PriorSpec, SummaryData};
use crate::numerics::{log_two_sided_p, Bracket};

/// ln BF₀₁ for the fixed normal prior N(mean, sd²).
pub fn ln_bf_normal(data: &SummaryData, mean: f64, sd: f64, theta0: f64) -> f64 {
    let s2 = data.se() * data.se();
    let t2 = sd * sd;
    let d0 = data.estimate() - theta0;
    let dm = data.estimate() - mean;
    0.5 * (t2 / s2).ln_1p() - 0.5 * (d0 * d0 / s2 - dm * dm / (s2 + t2))
}

pub fn bf_normal(data: &SummaryData, mean: f64, sd: f64, theta0: f64) -> f64 {
    ln_bf_normal(data, mean, sd, theta0).exp()
}

// z²/(1 + σ²/σθ²), the shrunken squared distance shared by the local priors
fn shrunk_z2(data: &SummaryData, sd: f64, theta0: f64) -> f64 {
    let r = (sd / data.se()).powi(2);
    let z = data.z(theta0);
    z * z * r / (1.0 + r)
}

pub fn ln_bf_local_normal(data: &SummaryData, sd: f64, theta0: f64) -> f64 {
    let r = (sd / data.se()).powi(2);
    0.5 * r.ln_1p() - 0.5 * shrunk_z2(data, sd, theta0)
}

pub fn bf_local_normal(data: &SummaryData, sd: f64, theta0: f64) -> f64 {
    ln_bf_local_normal(data, sd, theta0).exp()
}

pub fn ln_bf_nonlocal_moment(data: &SummaryData, scale: f64, theta0: f64) -> f64 {
    let r = (scale / data.se()).powi(2);
    let y = shrunk_z2(data, scale, theta0);
    1.5 * r.ln_1p() - 0.5 * y - y.ln_1p()
}

pub fn bf_nonlocal_moment(data: &SummaryData, scale: f64, theta0: f64) -> f64 {
    ln_bf_nonlocal_moment(data, scale, theta0).exp()
}

pub fn ln_bf01(data: &SummaryData, prior: &PriorSpec, theta0: f64) -> f64 {
    match *prior {
        PriorSpec::Normal { mean, sd } => ln_bf_normal(data, mean, sd, theta0),
        PriorSpec::LocalNormal { sd } => ln_bf_local_normal(data, sd, theta0),
        PriorSpec::NonlocalNormalMoment { scale } => ln_bf_nonlocal_moment(data, scale, theta0),
    }
}

pub fn bf01(data: &SummaryData, prior: &PriorSpec, theta0: f64) -> f64 {
    ln_bf01(data, prior, theta0).exp()
}

/// Point-mass alternative at θ̂: exp(−z²/2).
pub fn ln_minbf_all(data: &SummaryData, theta0: f64) -> f64 {
    let z = data.z(theta0);
    -0.5 * z * z
}

pub fn minbf_all(data: &SummaryData, theta0: f64) -> f64 {
    ln_minbf_all(data, theta0).exp()
}

/// Local normal alternatives with the marginal-likelihood-maximizing
/// variance max{(θ̂ − θ₀)² − σ², 0}.
pub fn ln_minbf_local_normal(data: &SummaryData, theta0: f64) -> f64 {
    let z = data.z(theta0).abs();
    if z > 1.0 {
        z.ln() - 0.5 * z * z + 0.5
    } else {
        0.0
    }
}

pub fn minbf_local_normal(data: &SummaryData, theta0: f64) -> f64 {
    ln_minbf_local_normal(data, theta0).exp()
}

/// The −e·p·log p bound, with p the two-sided p-value of θ₀.
pub fn ln_minbf_eplogp(data: &SummaryData, theta0: f64) -> f64 {
    let ln_p = log_two_sided_p(data.z(theta0));
    // p <= 1/e
    if ln_p <= -1.0 {
        1.0 + ln_p + (-ln_p).ln()
    } else {
        0.0
    }
}

pub fn minbf_eplogp(data: &SummaryData, theta0: f64) -> f64 {
    ln_minbf_eplogp(data, theta0).exp()
}

pub fn ln_min_bf01(data: &SummaryData, family: MinBfFamily, theta0: f64) -> f64 {
    match family {
        MinBfFamily::AllPriors => ln_minbf_all(data, theta0),
        MinBfFamily::LocalNormalClass => ln_minbf_local_normal(data, theta0),
        MinBfFamily::EpLogP => ln_minbf_eplogp(data, theta0),
    }
}

pub fn min_bf01(data: &SummaryData, family: MinBfFamily, theta0: f64) -> f64 {
    ln_min_bf01(data, family, theta0).exp()
}

/// The Bayes factor function that a support or minimum support interval
/// is cut from.
pub fn method_bf01(data: &SummaryData, method: &IntervalMethod, theta0: f64) -> Result<f64> {
    match method {
        IntervalMethod::SupportInterval { prior, .. } => Ok(bf01(data, prior, theta0)),
        IntervalMethod::MinSupportInterval { family, .. } => Ok(min_bf01(data, *family, theta0)),
        IntervalMethod::ConfidenceInterval { .. } => Err(Error::UnsupportedMethod(
            "confidence intervals have no Bayes factor function".into(),
        )),
    }
}

/// BF₀₁ tabulated over a uniform grid of null values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BfCurve {
    pub method: IntervalMethod,
    pub grid: Vec<(f64, f64)>,
}

impl BfCurve {
    /// Grid point with the largest Bayes factor.
    pub fn argmax(&self) -> (f64, f64) {
        self.grid
            .iter()
            .copied()
            .fold((f64::NAN, f64::NEG_INFINITY), |best, p| {
                if p.1 > best.1 {
                    p
                } else {
                    best
                }
            })
    }

    /// Null values where the curve crosses height `k`, linearly interpolated
    /// between grid points.
    pub fn crossings(&self, k: f64) -> Vec<f64> {
        self.grid
            .windows(2)
            .filter_map(|w| {
                let ((x0, y0), (x1, y1)) = (w[0], w[1]);
                if (y0 - k).signum() != (y1 - k).signum() && y0 != y1 {
                    Some(x0 + (k - y0) * (x1 - x0) / (y1 - y0))
                } else {
                    None
                }
            })
            .collect()
    }
}

pub fn bf_curve(
    data: &SummaryData,
    method: &IntervalMethod,
    range: Bracket,
    points: usize,
) -> Result<BfCurve> {
    if points < 2 {
        return Err(Error::InvalidInput(format!(
            "a curve needs at least 2 points, got {points}"
        )));
    }
    method.validate()?;
    let step = range.width() / (points - 1) as f64;
    let grid = (0..points)
        .map(|i| {
            // pin the last point to the range end instead of accumulating rounding
            let theta0 = if i == points - 1 {
                range.hi()
            } else {
                range.lo() + step * i as f64
            };
            method_bf01(data, method, theta0).map(|bf| (theta0, bf))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BfCurve {
        method: *method,
        grid,
    })
}
