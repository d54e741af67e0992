use clap::ValueEnum;
use serde::Serialize;
use supcal::calibration::{ci_level_to_min_support, min_support_to_ci_level};
use supcal::MinBfFamily;

use crate::failure::Failure;
use crate::labels::{label, Scale};
use crate::output::{level_k, percent, print_json, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    All,
    LocalNormal,
    Eplogp,
}

impl Family {
    fn as_str(self) -> &'static str {
        match self {
            Family::All => "all",
            Family::LocalNormal => "local-normal",
            Family::Eplogp => "eplogp",
        }
    }

    fn min_bf(self) -> MinBfFamily {
        match self {
            Family::All => MinBfFamily::AllPriors,
            Family::LocalNormal => MinBfFamily::LocalNormalClass,
            Family::Eplogp => MinBfFamily::EpLogP,
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Minimum Bayes factor family.
    #[arg(long, value_enum)]
    family: Family,

    /// Confidence level to map to a minimum support level.
    #[arg(long, conflicts_with = "k", required_unless_present = "k")]
    ci_level: Option<f64>,

    /// Minimum support level to map to a confidence level.
    #[arg(long)]
    k: Option<f64>,

    /// Annotate k with a conventional evidence label.
    #[arg(long, value_enum)]
    label: Option<Scale>,

    /// Emit a JSON object instead of the report.
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    schema_version: u32,
    family: &'static str,
    ci_level: f64,
    k: f64,
}

pub fn run(args: Args) -> Result<(), Failure> {
    let family = args.family.min_bf();
    let (ci_level, k) = match (args.ci_level, args.k) {
        (Some(level), None) => (level, ci_level_to_min_support(level, family)?),
        (None, Some(k)) => (min_support_to_ci_level(k, family)?, k),
        _ => return Err(Failure::usage("give exactly one of --ci-level and --k")),
    };
    if args.json {
        return print_json(&Report {
            schema: "map",
            schema_version: SCHEMA_VERSION,
            family: args.family.as_str(),
            ci_level,
            k,
        });
    }
    let note = args
        .label
        .and_then(|scale| label(scale, k))
        .map(|t| format!(" ({t})"))
        .unwrap_or_default();
    println!(
        "{} confidence interval <-> k = {}{note} minimum support interval ({family})",
        percent(ci_level),
        level_k(k)
    );
    Ok(())
}
