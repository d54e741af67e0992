use serde::Serialize;
use supcal::design::{design, DesignPrior, DesignSpec, WidthDesign, WidthMode};
use supcal::PriorSpec;

use crate::args::{PriorArgs, PriorFamily};
use crate::failure::Failure;
use crate::output::{print_json, trim2, SCHEMA_VERSION};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Support level k of the planned interval (> 1).
    #[arg(long)]
    k: f64,

    /// Variance λ² of one observation, so that se = λ/√n.
    #[arg(long, default_value_t = 1.0)]
    unit_var: f64,

    /// Target interval width.
    #[arg(long)]
    width: Option<f64>,

    /// Jeffreys's approximate Bayes factor (unit-information prior at the estimate).
    #[arg(long, conflicts_with = "prior")]
    jeffreys: bool,

    /// Analysis prior family.
    #[arg(long, value_enum, required_unless_present = "jeffreys")]
    prior: Option<PriorFamily>,

    #[command(flatten)]
    prior_args: PriorArgs,

    /// Planning value of the estimate; defaults to the prior mean.
    #[arg(long)]
    anticipated_estimate: Option<f64>,

    /// Solve the width equation with the exact multiplier instead of the
    /// closed-form approximation.
    #[arg(long)]
    exact: bool,

    /// Emit a JSON object instead of the report.
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum WidthJson {
    Feasible { n1: u64, n2: u64 },
    Infeasible { max_width: f64 },
}

#[derive(Serialize)]
#[serde(untagged)]
enum PriorJson {
    Named(&'static str),
    Spec(PriorSpec),
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    schema_version: u32,
    k: f64,
    unit_var: f64,
    prior: PriorJson,
    width: Option<f64>,
    width_mode: &'static str,
    n_exists: u64,
    note: Option<String>,
    width_design: Option<WidthJson>,
}

pub fn run(args: Args) -> Result<(), Failure> {
    if args.k.is_nan() || args.k <= 1.0 {
        return Err(Failure::usage(format!(
            "design needs --k above 1, got {}",
            args.k
        )));
    }
    let prior = match args.prior {
        Some(family) => DesignPrior::Prior(args.prior_args.spec(family)?),
        None if args.prior_args.given() => {
            return Err(Failure::usage("--jeffreys takes no prior flags"));
        }
        None => DesignPrior::Jeffreys,
    };
    let spec = DesignSpec {
        k: args.k,
        unit_var: args.unit_var,
        prior,
        anticipated_estimate: args.anticipated_estimate,
        target_width: args.width,
        width_mode: if args.exact {
            WidthMode::Exact
        } else {
            WidthMode::ClosedForm
        },
    };
    let result = design(&spec)?;

    if args.json {
        print_json(&Report {
            schema: "design",
            schema_version: SCHEMA_VERSION,
            k: args.k,
            unit_var: args.unit_var,
            prior: match prior {
                DesignPrior::Jeffreys => PriorJson::Named("jeffreys"),
                DesignPrior::Prior(p) => PriorJson::Spec(p),
            },
            width: args.width,
            width_mode: if args.exact { "exact" } else { "closed_form" },
            n_exists: result.n_exists,
            note: result.note.clone(),
            width_design: result.n_width.map(|w| match w {
                WidthDesign::Feasible { n1, n2 } => WidthJson::Feasible { n1, n2 },
                WidthDesign::Infeasible { max_width } => WidthJson::Infeasible { max_width },
            }),
        })?;
    } else {
        let analysis = match prior {
            DesignPrior::Jeffreys => "Jeffreys approximate Bayes factor".to_string(),
            DesignPrior::Prior(p) => crate::commands::describe_prior(&p).replace('\n', " "),
        };
        println!("Design for a k = {} Support Interval", trim2(args.k));
        println!("{analysis}, unit variance {}", trim2(args.unit_var));
        println!("\nSample size for existence\nn = {}", result.n_exists);
        if let Some(note) = &result.note {
            println!("({note})");
        }
        match (args.width, result.n_width) {
            (Some(width), Some(WidthDesign::Feasible { n1, n2 })) => {
                println!(
                    "\nSample size for width {}\nn1 = {n1}, n2 = {n2}",
                    trim2(width)
                );
            }
            (Some(width), Some(WidthDesign::Infeasible { max_width })) => {
                println!(
                    "\nSample size for width {}\nINFEASIBLE: the widest attainable interval has width {} (width <= 2λ/(k√e))",
                    trim2(width),
                    trim2(max_width)
                );
            }
            _ => {}
        }
    }

    if let Some(WidthDesign::Infeasible { max_width }) = result.n_width {
        return Err(Failure::NoResult(format!(
            "no sample size gives width {}; the largest attainable width is {max_width}",
            args.width.unwrap_or(f64::NAN)
        )));
    }
    Ok(())
}
