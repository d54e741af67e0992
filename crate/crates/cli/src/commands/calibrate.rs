use serde::Serialize;
use supcal::intervals::compute_interval;
use supcal::{PriorSpec, RealInterval};

use crate::args::{method, prior_of, DataArgs, InputInterval, MethodName, PriorArgs};
use crate::commands::{describe, title};
use crate::failure::Failure;
use crate::labels::{label, Scale};
use crate::output::{fixed2, interval_text, percent, print_json, IntervalJson, SCHEMA_VERSION};

#[derive(Debug, clap::Args)]
pub struct Args {
    #[command(flatten)]
    data: DataArgs,

    /// Interval to compute.
    #[arg(long, value_enum)]
    method: MethodName,

    #[command(flatten)]
    prior: PriorArgs,

    /// Support level k, or the confidence level for --method ci.
    #[arg(long, visible_alias = "si-level")]
    level: f64,

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
    estimate: f64,
    se: f64,
    input_interval: Option<InputInterval>,
    method: &'static str,
    prior: Option<PriorSpec>,
    level: f64,
    interval: IntervalJson,
    multiplier: Option<f64>,
    exists: bool,
    condition: String,
}

pub fn run(args: Args) -> Result<(), Failure> {
    let (data, input) = args.data.resolve()?;
    let method = method(args.method, args.level, &args.prior)?;
    let result = compute_interval(&data, &method)?;

    if args.json {
        print_json(&Report {
            schema: "calibrate",
            schema_version: SCHEMA_VERSION,
            estimate: data.estimate(),
            se: data.se(),
            input_interval: input,
            method: args.method.as_str(),
            prior: prior_of(&method),
            level: args.level,
            interval: IntervalJson::from(&result.interval),
            multiplier: result.multiplier.value,
            exists: result.multiplier.satisfied,
            condition: result.multiplier.condition.clone(),
        })?;
    } else {
        match input {
            Some(ci) => println!(
                "Point Estimate [{} CI]\n{} [{},{}]",
                percent(ci.level),
                fixed2(data.estimate()),
                fixed2(ci.lower),
                fixed2(ci.upper)
            ),
            None => println!(
                "Point Estimate (Standard Error)\n{} ({})",
                fixed2(data.estimate()),
                fixed2(data.se())
            ),
        }
        println!("\nCalibration Method\n{}\n", describe(&method));
        let mut heading = title(&method);
        if let Some(text) = args
            .label
            .zip(method.k())
            .and_then(|(scale, k)| label(scale, k))
        {
            heading = format!("{heading} ({text})");
        }
        println!("{heading}");
        match result.interval {
            RealInterval::Empty => {
                println!("does not exist (requires {})", result.multiplier.condition)
            }
            ref iv => println!("{}", interval_text(iv)),
        }
    }

    if result.interval == RealInterval::Empty {
        return Err(Failure::NoResult(format!(
            "the {} does not exist for these data; it needs {}",
            title(&method),
            result.multiplier.condition
        )));
    }
    Ok(())
}
