//! Sample sizes for a future study analysed with a k > 1 support interval.
//!
//! With σ² = λ²/n the normal-prior interval exists once
//! log(1 + σθ²/σ²) + (θ̂ − μθ)²/(σ² + σθ²) ≥ 2 log k, which for Jeffreys's
//! approximate Bayes factor (μθ = θ̂, σθ² = λ²) reduces to n ≥ k² − 1.
//!
//! A target width ℓ = 2σ·M_k is met twice: once while the interval is
//! still opening up, once when it narrows again. For the Jeffreys prior,
//! approximating log(1 + n) by log n gives n = k²·exp{−W(−k²ℓ²/(4λ²))},
//! one solution per real Lambert W branch.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intervals::multiplier;
use crate::model::{IntervalMethod, PriorSpec, SummaryData};
use crate::numerics::{find_root, lambert_w0, lambert_wm1, Bracket, BRANCH_POINT};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum DesignPrior {
    /// Jeffreys's approximate Bayes factor: normal prior centred on the
    /// estimate with unit-information variance λ².
    Jeffreys,
    Prior(PriorSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum WidthMode {
    /// Closed form under log(1 + n) ≈ log n (Jeffreys prior only).
    #[default]
    ClosedForm,
    /// Solve the width equation numerically with the exact multiplier.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DesignSpec {
    pub k: f64,
    pub unit_var: f64,
    pub prior: DesignPrior,
    /// Planning value of θ̂; defaults to the prior mean.
    pub anticipated_estimate: Option<f64>,
    pub target_width: Option<f64>,
    pub width_mode: WidthMode,
}

impl DesignSpec {
    pub fn jeffreys(k: f64, unit_var: f64) -> Self {
        DesignSpec {
            k,
            unit_var,
            prior: DesignPrior::Jeffreys,
            anticipated_estimate: None,
            target_width: None,
            width_mode: WidthMode::ClosedForm,
        }
    }

    pub fn with_width(mut self, width: f64) -> Self {
        self.target_width = Some(width);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.k.is_finite() && self.k >= 1.0) {
            return Err(Error::InvalidInput(format!(
                "design support level k must be at least 1, got {}",
                self.k
            )));
        }
        if !(self.unit_var.is_finite() && self.unit_var > 0.0) {
            return Err(Error::InvalidInput(format!(
                "unit variance must be positive, got {}",
                self.unit_var
            )));
        }
        if let Some(w) = self.target_width {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidInput(format!(
                    "target width must be positive, got {w}"
                )));
            }
        }
        if let DesignPrior::Prior(p) = self.prior {
            p.validate()?;
        }
        if let Some(e) = self.anticipated_estimate {
            if !e.is_finite() {
                return Err(Error::InvalidInput(
                    "anticipated estimate must be finite".into(),
                ));
            }
        }
        Ok(())
    }

    fn planning_estimate(&self) -> f64 {
        match (self.anticipated_estimate, self.prior) {
            (Some(e), _) => e,
            (None, DesignPrior::Prior(PriorSpec::Normal { mean, .. })) => mean,
            _ => 0.0,
        }
    }

    /// Squared multiplier of the k support interval at (continuous) sample size n.
    fn radicand(&self, n: f64) -> Result<f64> {
        match self.prior {
            DesignPrior::Jeffreys => Ok(n.ln_1p() - 2.0 * self.k.ln()),
            DesignPrior::Prior(prior) => {
                let data = SummaryData::new(self.planning_estimate(), (self.unit_var / n).sqrt())?;
                let m = multiplier(&IntervalMethod::SupportInterval { k: self.k, prior }, &data)?;
                // nonexistence is reported as a negative radicand
                Ok(m.value.map_or(-1.0, |m| m * m))
            }
        }
    }

    /// Interval width 2σ·M_k at sample size n, zero where it does not exist.
    pub fn width_at(&self, n: f64) -> Result<f64> {
        let r = self.radicand(n)?;
        Ok(if r > 0.0 {
            2.0 * (self.unit_var / n).sqrt() * r.sqrt()
        } else {
            0.0
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum WidthDesign {
    Feasible {
        n1: u64,
        n2: u64,
    },
    /// No sample size reaches the target; `max_width` is the widest attainable.
    Infeasible {
        max_width: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DesignResult {
    pub n_exists: u64,
    pub note: Option<String>,
    pub n_width: Option<WidthDesign>,
}

const N_CAP: f64 = 1e15;

/// Smallest n for which the k support interval exists.
///
/// May be 0 when any sample size works (k = 1 with the Jeffreys prior).
pub fn n_for_existence(spec: &DesignSpec) -> Result<u64> {
    spec.validate()?;
    if let DesignPrior::Jeffreys = spec.prior {
        return Ok((spec.k * spec.k - 1.0).ceil().max(0.0) as u64);
    }
    let exists = |n: u64| {
        spec.radicand(n as f64)
            .map(|r| r >= -crate::intervals::RADICAND_SNAP)
    };
    if exists(1)? {
        return Ok(1);
    }
    // doubling finds a bracket (lo fails, hi succeeds), then bisect on integers
    let mut lo = 1u64;
    let mut hi = 2u64;
    while !exists(hi)? {
        lo = hi;
        hi = hi
            .checked_mul(2)
            .filter(|&h| (h as f64) < N_CAP)
            .ok_or_else(|| {
                Error::InvalidInput(
                    "the support interval does not exist at any practical sample size".into(),
                )
            })?;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if exists(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

fn ceil_n(n: f64) -> u64 {
    n.ceil() as u64
}

/// Sample sizes whose k support interval has the target width.
pub fn n_for_width(spec: &DesignSpec) -> Result<WidthDesign> {
    spec.validate()?;
    let width = spec
        .target_width
        .ok_or_else(|| Error::InvalidInput("a target width is required".into()))?;
    match (spec.prior, spec.width_mode) {
        (DesignPrior::Jeffreys, WidthMode::ClosedForm) => {
            Ok(jeffreys_closed_form(spec.k, spec.unit_var, width))
        }
        _ => numeric_width(spec, width),
    }
}

fn jeffreys_closed_form(k: f64, unit_var: f64, width: f64) -> WidthDesign {
    let arg = -(k * k * width * width) / (4.0 * unit_var);
    let max_width = 2.0 * unit_var.sqrt() / (k * std::f64::consts::E.sqrt());
    match (lambert_w0(arg), lambert_wm1(arg)) {
        (Ok(w0), Ok(wm1)) if arg >= BRANCH_POINT - crate::numerics::BOUNDARY_CLAMP => {
            WidthDesign::Feasible {
                n1: ceil_n(k * k * (-w0).exp()),
                n2: ceil_n(k * k * (-wm1).exp()),
            }
        }
        _ => WidthDesign::Infeasible { max_width },
    }
}

fn numeric_width(spec: &DesignSpec, width: f64) -> Result<WidthDesign> {
    let n_start = n_for_existence(spec)?.max(1) as f64;
    let w = |ln_n: f64| spec.width_at(ln_n.exp());

    // the width rises from zero and decays like n^(-1/2) log(n)^(1/2); bracket the peak
    let lo = n_start.ln();
    let mut hi = lo + 1.0;
    while w(hi)? >= w(hi - 0.5)? && hi < N_CAP.ln() {
        hi += 1.0;
    }
    // golden section for the maximum over ln n
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (lo, hi);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut wc, mut wd) = (w(c)?, w(d)?);
    while b - a > 1e-10 {
        if wc > wd {
            b = d;
            d = c;
            wd = wc;
            c = b - g * (b - a);
            wc = w(c)?;
        } else {
            a = c;
            c = d;
            wc = wd;
            d = a + g * (b - a);
            wd = w(d)?;
        }
    }
    let peak = 0.5 * (a + b);
    let max_width = w(peak)?;
    if max_width < width {
        return Ok(WidthDesign::Infeasible { max_width });
    }

    let residual = |ln_n: f64| w(ln_n).map(|v| v - width).unwrap_or(f64::NAN);
    let n1 = if w(lo)? >= width {
        lo
    } else {
        find_root(residual, Bracket::new(lo, peak.max(lo + 1e-12))?, 1e-13)?
    };
    let mut far = peak + 1.0;
    while w(far)? > width {
        far += 1.0;
        if far > N_CAP.ln() {
            return Err(Error::InvalidInput(
                "target width requires an impractically large sample".into(),
            ));
        }
    }
    let n2 = find_root(residual, Bracket::new(peak, far)?, 1e-13)?;
    Ok(WidthDesign::Feasible {
        n1: ceil_n(n1.exp() - 1e-9),
        n2: ceil_n(n2.exp() - 1e-9),
    })
}

/// Existence sample size plus, when a width is targeted, the width design.
pub fn design(spec: &DesignSpec) -> Result<DesignResult> {
    let raw = n_for_existence(spec)?;
    let note =
        (raw == 0).then(|| "the interval exists at every sample size; reporting n = 1".to_owned());
    let n_width = match spec.target_width {
        Some(_) => Some(n_for_width(spec)?),
        None => None,
    };
    Ok(DesignResult {
        n_exists: raw.max(1),
        note,
        n_width,
    })
}
