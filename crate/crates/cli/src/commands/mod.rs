pub mod calibrate;
pub mod curve;
pub mod design;
pub mod map;
pub mod schema;
pub mod simulate;

use supcal::{IntervalMethod, MinBfFamily, PriorSpec};

use crate::output::{level_k, percent, trim2};

/// Method description lines, as printed under "Calibration Method".
pub fn describe(method: &IntervalMethod) -> String {
    match method {
        IntervalMethod::ConfidenceInterval { level } => {
            format!(
                "Confidence interval from the normal approximation\nwith level {}",
                percent(*level)
            )
        }
        IntervalMethod::SupportInterval { prior, .. } => describe_prior(prior),
        IntervalMethod::MinSupportInterval { family, .. } => match family {
            MinBfFamily::AllPriors => {
                "Minimum Bayes factor over all priors under alternative".to_string()
            }
            MinBfFamily::LocalNormalClass => {
                "Minimum Bayes factor over local normal priors under alternative".to_string()
            }
            MinBfFamily::EpLogP => {
                "Minimum Bayes factor -e p log(p) calibration of the p-value".to_string()
            }
        },
    }
}

pub fn describe_prior(prior: &PriorSpec) -> String {
    match prior {
        PriorSpec::Normal { mean, sd } => format!(
            "Normal prior for parameter under alternative\nwith mean m = {} and standard deviation sd = {}",
            trim2(*mean),
            trim2(*sd)
        ),
        PriorSpec::LocalNormal { sd } => format!(
            "Local normal prior for parameter under alternative\nwith standard deviation sd = {}",
            trim2(*sd)
        ),
        PriorSpec::NonlocalNormalMoment { scale } => format!(
            "Nonlocal normal moment prior for parameter under alternative\nwith spread s = {}",
            trim2(*scale)
        ),
    }
}

/// Heading of the resulting interval, e.g. "k = 10 Support Interval".
pub fn title(method: &IntervalMethod) -> String {
    match method {
        IntervalMethod::ConfidenceInterval { level } => {
            format!("{} Confidence Interval", percent(*level))
        }
        IntervalMethod::SupportInterval { k, .. } => {
            format!("k = {} Support Interval", level_k(*k))
        }
        IntervalMethod::MinSupportInterval { k, .. } => {
            format!("k = {} Minimum Support Interval", level_k(*k))
        }
    }
}
