use clap::ValueEnum;
use serde::Serialize;
use supcal::coverage::{simulate_coverage, Regime, SimConfig};
use supcal::PriorSpec;

use crate::args::{method, prior_of, MethodName, PriorArgs};
use crate::commands::{describe, title};
use crate::failure::Failure;
use crate::output::{print_json, trim2, SCHEMA_VERSION};

const DEFAULT_SEED: u64 = 20_230_601;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegimeName {
    /// One analysis after n observations.
    Fixed,
    /// A look after every observation, stopping once BF < k.
    Sequential,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    /// True parameter value θ*.
    #[arg(long, default_value_t = 0.0)]
    true_theta: f64,

    /// Variance λ² of one observation.
    #[arg(long, default_value_t = 1.0)]
    unit_var: f64,

    /// Support interval method (si-normal, si-local-normal or si-nonlocal).
    #[arg(long, value_enum)]
    method: MethodName,

    #[command(flatten)]
    prior: PriorArgs,

    /// Support level k (< 1); the coverage target is 1 - k.
    #[arg(long)]
    k: f64,

    #[arg(long, value_enum, default_value_t = RegimeName::Sequential)]
    regime: RegimeName,

    /// Sample size for --regime fixed.
    #[arg(long, required_if_eq("regime", "fixed"))]
    n: Option<u32>,

    /// Last look for --regime sequential.
    #[arg(long, default_value_t = 50)]
    max_looks: u32,

    /// Number of replications.
    #[arg(long, default_value_t = 10_000)]
    reps: u64,

    /// Random seed.
    #[arg(long, env = "SUPCAL_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Emit a JSON object instead of the report.
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    schema_version: u32,
    true_theta: f64,
    unit_var: f64,
    method: &'static str,
    prior: Option<PriorSpec>,
    k: f64,
    regime: &'static str,
    looks: Vec<u32>,
    replications: u64,
    seed: u64,
    coverage_estimate: f64,
    mc_stderr: f64,
    stop_fraction: f64,
    per_look_counts: Vec<u64>,
    covered: u64,
    stopped: u64,
    pass: bool,
}

pub fn run(args: Args) -> Result<(), Failure> {
    if args.method.family().is_some() {
        return Err(Failure::usage(
            "minimum support intervals have no coverage guarantee: the bound P(BF01 <= k) <= k \
             needs a prior fixed in advance, and a minimum Bayes factor picks the prior after seeing the data",
        ));
    }
    if args.method == MethodName::Ci {
        return Err(Failure::usage(
            "simulate checks support intervals; --method ci is not one",
        ));
    }
    if !(args.k > 0.0 && args.k < 1.0) {
        return Err(Failure::usage(format!(
            "simulate needs 0 < --k < 1, got {}",
            args.k
        )));
    }
    let method = method(args.method, args.k, &args.prior)?;
    let regime = match args.regime {
        RegimeName::Fixed => Regime::FixedN {
            n: args.n.unwrap_or(0),
        },
        RegimeName::Sequential => Regime::every_observation(args.max_looks),
    };
    let config = SimConfig {
        true_theta: args.true_theta,
        unit_var: args.unit_var,
        method,
        regime: regime.clone(),
        replications: args.reps,
        seed: args.seed,
    };
    let result = simulate_coverage(&config)?;
    let pass = result.coverage_ok(3.0) && result.bound_ok(3.0);

    if args.json {
        return print_json(&Report {
            schema: "simulate",
            schema_version: SCHEMA_VERSION,
            true_theta: args.true_theta,
            unit_var: args.unit_var,
            method: args.method.as_str(),
            prior: prior_of(&method),
            k: args.k,
            regime: match args.regime {
                RegimeName::Fixed => "fixed",
                RegimeName::Sequential => "sequential",
            },
            looks: result.looks.clone(),
            replications: result.replications,
            seed: args.seed,
            coverage_estimate: result.coverage_estimate,
            mc_stderr: result.mc_stderr,
            stop_fraction: result.stop_fraction,
            per_look_counts: result.per_look_counts.clone(),
            covered: result.covered,
            stopped: result.stopped,
            pass,
        });
    }
    let pct = |x: f64| format!("{:.2}%", 100.0 * x);
    println!("Coverage of the {}", title(&method));
    println!("{}", describe(&method));
    match regime {
        Regime::FixedN { n } => println!("fixed n = {n}"),
        _ => println!("optional stopping, looks at n = 1..{}", args.max_looks),
    }
    println!(
        "true value {}, unit variance {}, {} replications, seed {}\n",
        trim2(args.true_theta),
        trim2(args.unit_var),
        result.replications,
        args.seed
    );
    println!(
        "coverage      {} ± {} (target >= {})",
        pct(result.coverage_estimate),
        pct(result.mc_stderr),
        pct(1.0 - args.k)
    );
    println!(
        "stop fraction {} (bound <= {})",
        pct(result.stop_fraction),
        pct(args.k)
    );
    println!("{}", if pass { "PASS" } else { "FAIL" });
    Ok(())
}
