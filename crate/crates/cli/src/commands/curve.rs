use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use anyhow::Context;
use clap::ValueEnum;
use serde::Serialize;
use supcal::bayes_factors::bf_curve;
use supcal::numerics::Bracket;
use supcal::PriorSpec;

use crate::args::{method, prior_of, DataArgs, MethodName, PriorArgs};
use crate::failure::Failure;
use crate::output::SCHEMA_VERSION;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[command(flatten)]
    data: DataArgs,

    /// Bayes factor to tabulate (any method except ci).
    #[arg(long, value_enum)]
    method: MethodName,

    #[command(flatten)]
    prior: PriorArgs,

    /// First null value of the grid.
    #[arg(long)]
    from: f64,

    /// Last null value of the grid.
    #[arg(long)]
    to: f64,

    /// Number of grid points.
    #[arg(long, default_value_t = 401)]
    points: usize,

    /// Add a column flagging membership in the k support interval.
    #[arg(long, value_name = "K")]
    cut: Option<f64>,

    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Serialize)]
struct Point {
    theta0: f64,
    bf01: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_si: Option<bool>,
}

#[derive(Serialize)]
struct Curve {
    schema: &'static str,
    schema_version: u32,
    estimate: f64,
    se: f64,
    method: &'static str,
    prior: Option<PriorSpec>,
    cut: Option<f64>,
    points: Vec<Point>,
}

pub fn run(args: Args) -> Result<(), Failure> {
    if args.method == MethodName::Ci {
        return Err(Failure::usage("--method ci has no Bayes factor curve"));
    }
    if args.points < 2 {
        return Err(Failure::usage("--points must be at least 2"));
    }
    let (data, _) = args.data.resolve()?;
    let method = method(args.method, args.cut.unwrap_or(1.0), &args.prior)?;
    let curve = bf_curve(
        &data,
        &method,
        Bracket::new(args.from, args.to)?,
        args.points,
    )?;
    let points: Vec<Point> = curve
        .grid
        .iter()
        .map(|&(theta0, bf01)| Point {
            theta0,
            bf01,
            in_si: args.cut.map(|k| bf01 >= k),
        })
        .collect();

    let text = match args.format {
        Format::Csv => {
            let mut s = String::from(if args.cut.is_some() {
                "theta0,bf01,in_si\n"
            } else {
                "theta0,bf01\n"
            });
            for p in &points {
                let _ = write!(s, "{:.16e},{:.16e}", p.theta0, p.bf01);
                if let Some(inside) = p.in_si {
                    let _ = write!(s, ",{inside}");
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let curve = Curve {
                schema: "bf-curve",
                schema_version: SCHEMA_VERSION,
                estimate: data.estimate(),
                se: data.se(),
                method: args.method.as_str(),
                prior: prior_of(&method),
                cut: args.cut,
                points,
            };
            serde_json::to_string_pretty(&curve).map_err(anyhow::Error::from)? + "\n"
        }
    };
    match &args.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .context("writing to stdout")?,
    }
    Ok(())
}
