//! Standard-error multipliers M for every interval type; each interval is
//! θ̂ ± σ·M.
//!
//! | interval                  | M                                                         |
//! |---------------------------|-----------------------------------------------------------|
//! | (1 − α) CI                | Φ⁻¹(1 − α/2)                                              |
//! | k SI, normal prior        | √{log(1 + σθ²/σ²) + (θ̂ − μθ)²/(σ² + σθ²) − 2 log k}       |
//! | k SI, local normal prior  | √[{log(1 + σθ²/σ²) − 2 log k}(1 + σ²/σθ²)]                |
//! | k SI, normal moment prior | √([2 W₀{(1 + σθ²/σ²)^{3/2} √e / (2k)} − 1](1 + σ²/σθ²))   |
//! | k minSI, all priors       | √(−2 log k)                                               |
//! | k minSI, local normal     | √{−W₋₁(−k²/e)}                                            |
//! | k minSI, −e p log p       | Φ⁻¹[1 − exp{W₋₁(−k/e)}/2]                                 |
//!
//! Support intervals with k > 1 can fail to exist. The normal moment
//! interval, for instance, needs W₀ ≥ 1/2, i.e. a W₀ argument of at least
//! ½√e ≈ 0.82. Existence is decided from the sign of the computed radicand.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{
    check_k, ci_multiplier, EffectiveSample, IntervalMethod, MinBfFamily, PriorSpec, RealInterval,
    SummaryData,
};
use crate::numerics::{
    find_root, lambert_w0, lambert_wm1, norm_cdf, norm_pdf, norm_quantile, Bracket,
};

/// Radicands in `[-RADICAND_SNAP, 0]` are rounded to zero.
pub const RADICAND_SNAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplierResult {
    /// `None` when the interval does not exist.
    pub value: Option<f64>,
    /// Human-readable existence condition for this interval type.
    pub condition: String,
    pub satisfied: bool,
}

impl MultiplierResult {
    fn always(value: f64, condition: &str) -> Self {
        MultiplierResult {
            value: Some(value),
            condition: condition.to_owned(),
            satisfied: true,
        }
    }

    fn from_radicand(radicand: f64, condition: String) -> Self {
        let radicand = if (-RADICAND_SNAP..=0.0).contains(&radicand) {
            0.0
        } else {
            radicand
        };
        if radicand >= 0.0 {
            MultiplierResult {
                value: Some(radicand.sqrt()),
                condition,
                satisfied: true,
            }
        } else {
            MultiplierResult {
                value: None,
                condition,
                satisfied: false,
            }
        }
    }

    pub fn exists(&self) -> bool {
        self.value.is_some()
    }
}

/// Multiplier and resulting interval.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntervalResult {
    pub interval: RealInterval,
    pub multiplier: MultiplierResult,
}

fn normal_prior_radicand(data: &SummaryData, mean: f64, sd: f64, k: f64) -> f64 {
    let s2 = data.se() * data.se();
    let t2 = sd * sd;
    let dm = data.estimate() - mean;
    (t2 / s2).ln_1p() + dm * dm / (s2 + t2) - 2.0 * k.ln()
}

fn local_normal_radicand(se: f64, sd: f64, k: f64) -> f64 {
    let r = (sd / se).powi(2);
    (r.ln_1p() - 2.0 * k.ln()) * (1.0 + 1.0 / r)
}

fn nonlocal_radicand(se: f64, scale: f64, k: f64) -> Result<f64> {
    let r = (scale / se).powi(2);
    let arg = (1.5 * r.ln_1p() + 0.5 - std::f64::consts::LN_2 - k.ln()).exp();
    let w = lambert_w0(arg)?;
    Ok((2.0 * w - 1.0) * (1.0 + 1.0 / r))
}

fn support_multiplier(data: &SummaryData, prior: &PriorSpec, k: f64) -> Result<MultiplierResult> {
    Ok(match *prior {
        PriorSpec::Normal { mean, sd } => MultiplierResult::from_radicand(
            normal_prior_radicand(data, mean, sd, k),
            "log(1 + sd²/se²) + (estimate − mean)²/(se² + sd²) >= 2 log k".into(),
        ),
        PriorSpec::LocalNormal { sd } => MultiplierResult::from_radicand(
            local_normal_radicand(data.se(), sd, k),
            "log(1 + sd²/se²) >= 2 log k".into(),
        ),
        PriorSpec::NonlocalNormalMoment { scale } => MultiplierResult::from_radicand(
            nonlocal_radicand(data.se(), scale, k)?,
            "W0((1 + scale²/se²)^(3/2) √e / (2k)) >= 1/2, i.e. (1 + scale²/se²)^(3/2) >= k".into(),
        ),
    })
}

fn min_support_multiplier(family: MinBfFamily, k: f64) -> Result<MultiplierResult> {
    if k > 1.0 {
        return Err(Error::UnsupportedLevel { k });
    }
    const COND: &str = "k <= 1";
    Ok(match family {
        MinBfFamily::AllPriors => MultiplierResult::always((-2.0 * k.ln()).max(0.0).sqrt(), COND),
        MinBfFamily::LocalNormalClass => {
            let w = lambert_wm1(-k * k / std::f64::consts::E)?;
            MultiplierResult::always((-w).sqrt(), COND)
        }
        MinBfFamily::EpLogP => {
            let w = lambert_wm1(-k / std::f64::consts::E)?;
            // Φ⁻¹(1 − q) = −Φ⁻¹(q) keeps precision when q is tiny
            MultiplierResult::always(-norm_quantile(0.5 * w.exp())?, COND)
        }
    })
}

pub fn multiplier(method: &IntervalMethod, data: &SummaryData) -> Result<MultiplierResult> {
    method.validate()?;
    match *method {
        IntervalMethod::ConfidenceInterval { level } => Ok(MultiplierResult::always(
            ci_multiplier(level)?,
            "0 < level < 1",
        )),
        IntervalMethod::SupportInterval { k, prior } => support_multiplier(data, &prior, k),
        IntervalMethod::MinSupportInterval { k, family } => min_support_multiplier(family, k),
    }
}

pub fn interval_from_multiplier(data: &SummaryData, m: &MultiplierResult) -> RealInterval {
    match m.value {
        Some(m) => RealInterval::symmetric(data.estimate(), data.se() * m),
        None => RealInterval::Empty,
    }
}

/// Multiplier together with the interval it produces.
pub fn compute_interval(data: &SummaryData, method: &IntervalMethod) -> Result<IntervalResult> {
    let multiplier = multiplier(method, data)?;
    Ok(IntervalResult {
        interval: interval_from_multiplier(data, &multiplier),
        multiplier,
    })
}

pub fn support_interval(data: &SummaryData, method: &IntervalMethod) -> Result<RealInterval> {
    compute_interval(data, method).map(|r| r.interval)
}

/// Variant of the support interval for Jeffreys's approximate Bayes factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum JeffreysVariant {
    /// Normal prior centred on θ̂ with unit-information variance n·σ².
    Plain,
    /// Local normal prior with unit-information variance.
    UnitInformation,
}

pub fn jeffreys_multiplier(
    n: &EffectiveSample,
    k: f64,
    variant: JeffreysVariant,
) -> Result<MultiplierResult> {
    check_k(k)?;
    let base = n.n().ln_1p() - 2.0 * k.ln();
    let radicand = match variant {
        JeffreysVariant::Plain => base,
        JeffreysVariant::UnitInformation => base * (1.0 + 1.0 / n.n()),
    };
    Ok(MultiplierResult::from_radicand(
        radicand,
        "n >= k² − 1".into(),
    ))
}

pub fn jeffreys_si(
    data: &SummaryData,
    n: &EffectiveSample,
    k: f64,
    variant: JeffreysVariant,
) -> Result<RealInterval> {
    let m = jeffreys_multiplier(n, k, variant)?;
    Ok(interval_from_multiplier(data, &m))
}

/// Probability that a normal moment prior with the given scale puts within
/// `halfwidth` of its symmetry point: 2Φ(u) − 1 − 2u·φ(u), u = halfwidth/scale.
pub fn nm_central_mass(halfwidth: f64, scale: f64) -> f64 {
    let u = halfwidth / scale;
    // 2Φ(u) − 1 = 1 − 2Φ(−u)
    1.0 - 2.0 * norm_cdf(-u) - 2.0 * u * norm_pdf(u)
}

/// Scale of the normal moment prior placing `mass` within ±`halfwidth`
/// of θ₀.
pub fn nm_scale_from_mass(halfwidth: f64, mass: f64) -> Result<f64> {
    if !(halfwidth.is_finite() && halfwidth > 0.0) {
        return Err(Error::InvalidInput(format!(
            "halfwidth must be positive, got {halfwidth}"
        )));
    }
    if !(mass > 0.0 && mass < 1.0) {
        return Err(Error::InvalidInput(format!(
            "mass must lie in (0, 1), got {mass}"
        )));
    }
    // solve in u = halfwidth/scale; the central mass increases in u from 0 to 1
    let mut hi = 1.0;
    while nm_central_mass(hi, 1.0) < mass {
        hi *= 2.0;
    }
    let u = find_root(
        |u| nm_central_mass(u, 1.0) - mass,
        Bracket::new(0.0, hi)?,
        1e-14,
    )?;
    Ok(halfwidth / u)
}
