use clap::ValueEnum;
use serde::Serialize;

use supcal::{summary_from_ci, IntervalMethod, MinBfFamily, PriorSpec, SummaryData};

use crate::failure::Failure;

#[derive(Debug, clap::Args)]
pub struct DataArgs {
    /// Point estimate.
    #[arg(long)]
    pub estimate: Option<f64>,
    /// Standard error of the estimate.
    #[arg(long)]
    pub se: Option<f64>,
    /// Lower limit of a confidence interval.
    #[arg(long)]
    pub ci_lower: Option<f64>,
    /// Upper limit of a confidence interval.
    #[arg(long)]
    pub ci_upper: Option<f64>,
    /// Level of the confidence interval, e.g. 0.95.
    #[arg(long)]
    pub ci_level: Option<f64>,
}

/// Confidence interval the data were given as.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct InputInterval {
    pub lower: f64,
    pub upper: f64,
    pub level: f64,
}

impl DataArgs {
    pub fn resolve(&self) -> Result<(SummaryData, Option<InputInterval>), Failure> {
        let summary = [self.estimate, self.se].iter().any(Option::is_some);
        let interval = [self.ci_lower, self.ci_upper, self.ci_level]
            .iter()
            .any(Option::is_some);
        let hint = "give either --estimate and --se, or --ci-lower, --ci-upper and --ci-level";
        match (summary, interval) {
            (true, false) => match (self.estimate, self.se) {
                (Some(e), Some(s)) => Ok((SummaryData::new(e, s)?, None)),
                _ => Err(Failure::usage(hint)),
            },
            (false, true) => match (self.ci_lower, self.ci_upper, self.ci_level) {
                (Some(lower), Some(upper), Some(level)) => {
                    let data = summary_from_ci(lower, upper, level)?;
                    Ok((
                        data,
                        Some(InputInterval {
                            lower,
                            upper,
                            level,
                        }),
                    ))
                }
                _ => Err(Failure::usage(hint)),
            },
            _ => Err(Failure::usage(hint)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodName {
    Ci,
    SiNormal,
    SiLocalNormal,
    SiNonlocal,
    MinsiAll,
    MinsiLocalNormal,
    MinsiEplogp,
}

impl MethodName {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodName::Ci => "ci",
            MethodName::SiNormal => "si-normal",
            MethodName::SiLocalNormal => "si-local-normal",
            MethodName::SiNonlocal => "si-nonlocal",
            MethodName::MinsiAll => "minsi-all",
            MethodName::MinsiLocalNormal => "minsi-local-normal",
            MethodName::MinsiEplogp => "minsi-eplogp",
        }
    }

    pub fn family(self) -> Option<MinBfFamily> {
        match self {
            MethodName::MinsiAll => Some(MinBfFamily::AllPriors),
            MethodName::MinsiLocalNormal => Some(MinBfFamily::LocalNormalClass),
            MethodName::MinsiEplogp => Some(MinBfFamily::EpLogP),
            _ => None,
        }
    }

    fn prior_family(self) -> Option<PriorFamily> {
        match self {
            MethodName::SiNormal => Some(PriorFamily::Normal),
            MethodName::SiLocalNormal => Some(PriorFamily::LocalNormal),
            MethodName::SiNonlocal => Some(PriorFamily::Nonlocal),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PriorFamily {
    Normal,
    LocalNormal,
    Nonlocal,
}

#[derive(Debug, clap::Args)]
pub struct PriorArgs {
    /// Prior mean (si-normal; defaults to 0).
    #[arg(long)]
    pub prior_mean: Option<f64>,
    /// Prior standard deviation (si-normal, si-local-normal).
    #[arg(long)]
    pub prior_sd: Option<f64>,
    /// Scale of the nonlocal normal moment prior (si-nonlocal).
    #[arg(long)]
    pub prior_scale: Option<f64>,
}

impl PriorArgs {
    pub fn given(&self) -> bool {
        self.prior_mean.is_some() || self.prior_sd.is_some() || self.prior_scale.is_some()
    }

    pub fn spec(&self, family: PriorFamily) -> Result<PriorSpec, Failure> {
        let unused = |flag: &str, name: &str| {
            Failure::usage(format!("{flag} does not apply to the {name} prior"))
        };
        let spec = match family {
            PriorFamily::Normal => {
                if self.prior_scale.is_some() {
                    return Err(unused("--prior-scale", "normal"));
                }
                let sd = self
                    .prior_sd
                    .ok_or_else(|| Failure::usage("the normal prior needs --prior-sd"))?;
                PriorSpec::Normal {
                    mean: self.prior_mean.unwrap_or(0.0),
                    sd,
                }
            }
            PriorFamily::LocalNormal => {
                if self.prior_mean.is_some() {
                    return Err(unused("--prior-mean", "local normal"));
                }
                if self.prior_scale.is_some() {
                    return Err(unused("--prior-scale", "local normal"));
                }
                let sd = self
                    .prior_sd
                    .ok_or_else(|| Failure::usage("the local normal prior needs --prior-sd"))?;
                PriorSpec::LocalNormal { sd }
            }
            PriorFamily::Nonlocal => {
                if self.prior_mean.is_some() || self.prior_sd.is_some() {
                    return Err(Failure::usage(
                        "the nonlocal moment prior takes --prior-scale only",
                    ));
                }
                let scale = self.prior_scale.ok_or_else(|| {
                    Failure::usage("the nonlocal moment prior needs --prior-scale")
                })?;
                PriorSpec::NonlocalNormalMoment { scale }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the interval method for `name` at `level` (k, or the confidence
/// level for `ci`).
pub fn method(name: MethodName, level: f64, prior: &PriorArgs) -> Result<IntervalMethod, Failure> {
    let method = if let Some(family) = name.prior_family() {
        IntervalMethod::SupportInterval {
            k: level,
            prior: prior.spec(family)?,
        }
    } else {
        if prior.given() {
            return Err(Failure::usage(format!(
                "--method {} takes no prior flags",
                name.as_str()
            )));
        }
        match name.family() {
            Some(family) => IntervalMethod::MinSupportInterval { k: level, family },
            None => IntervalMethod::ConfidenceInterval { level },
        }
    };
    method.validate()?;
    Ok(method)
}

pub fn prior_of(method: &IntervalMethod) -> Option<PriorSpec> {
    match method {
        IntervalMethod::SupportInterval { prior, .. } => Some(*prior),
        _ => None,
    }
}
