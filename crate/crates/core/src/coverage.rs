//! Monte Carlo check of the universal bound P{BF₀₁(x; θ*) ≤ k | θ = θ*} ≤ k
//! and of the resulting (1 − k) coverage of k < 1 support intervals, with a
//! fixed sample size or under optional stopping.
//!
//! Each replication draws from its own ChaCha stream selected by the
//! replication index, so results do not depend on thread scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::bayes_factors::ln_bf01;
use crate::error::{Error, Result};
use crate::intervals::support_interval;
use crate::model::{IntervalMethod, PriorSpec, SummaryData};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Regime {
    FixedN {
        n: u32,
    },
    /// Interim analyses at the listed sample sizes, stopping at the first
    /// look whose Bayes factor at θ* falls below k.
    OptionalStopping {
        looks: Vec<u32>,
    },
}

impl Regime {
    /// A look after every observation, n = 1, …, max_looks.
    pub fn every_observation(max_looks: u32) -> Self {
        Regime::OptionalStopping {
            looks: (1..=max_looks).collect(),
        }
    }

    /// Looks at roughly `first·ratio^j`, deduplicated after rounding, up to `max_n`.
    pub fn geometric(first: u32, ratio: f64, max_n: u32) -> Result<Self> {
        if first == 0 || ratio.is_nan() || ratio <= 1.0 || max_n < first {
            return Err(Error::InvalidInput(format!(
                "geometric schedule needs first >= 1, ratio > 1 and max_n >= first (got {first}, {ratio}, {max_n})"
            )));
        }
        let mut looks = Vec::new();
        let mut x = first as f64;
        while x.round() <= max_n as f64 {
            let n = x.round() as u32;
            if looks.last() != Some(&n) {
                looks.push(n);
            }
            x *= ratio;
        }
        if looks.last() != Some(&max_n) {
            looks.push(max_n);
        }
        Ok(Regime::OptionalStopping { looks })
    }

    pub fn looks(&self) -> Vec<u32> {
        match self {
            Regime::FixedN { n } => vec![*n],
            Regime::OptionalStopping { looks } => looks.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimConfig {
    pub true_theta: f64,
    pub unit_var: f64,
    pub method: IntervalMethod,
    pub regime: Regime,
    pub replications: u64,
    pub seed: u64,
}

impl SimConfig {
    fn prior_and_k(&self) -> Result<(PriorSpec, f64)> {
        match self.method {
            IntervalMethod::SupportInterval { k, prior } => {
                self.method.validate()?;
                if k > 1.0 {
                    return Err(Error::InvalidInput(format!(
                        "the coverage guarantee concerns support levels k <= 1, got k = {k}"
                    )));
                }
                Ok((prior, k))
            }
            IntervalMethod::MinSupportInterval { .. } => Err(Error::UnsupportedMethod(
                "minimum support intervals use data-dependent priors, so the universal bound and its coverage guarantee do not apply to them".into(),
            )),
            IntervalMethod::ConfidenceInterval { .. } => Err(Error::UnsupportedMethod(
                "coverage simulation needs a support interval method".into(),
            )),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.prior_and_k()?;
        if !self.true_theta.is_finite() {
            return Err(Error::InvalidInput("true theta must be finite".into()));
        }
        if !(self.unit_var.is_finite() && self.unit_var > 0.0) {
            return Err(Error::InvalidInput(format!(
                "unit variance must be positive, got {}",
                self.unit_var
            )));
        }
        if self.replications == 0 {
            return Err(Error::InvalidInput(
                "at least one replication is required".into(),
            ));
        }
        let looks = self.regime.looks();
        if looks.is_empty() || looks[0] == 0 || looks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "looks must be strictly increasing positive sample sizes".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimResult {
    pub replications: u64,
    /// Fraction of replications whose reported interval contains θ*.
    pub coverage_estimate: f64,
    /// √(p(1 − p)/R) for the coverage estimate p.
    pub mc_stderr: f64,
    /// Fraction of replications with BF₀₁(x; θ*) < k at some look.
    pub stop_fraction: f64,
    /// Number of stops at each look, aligned with `looks`.
    pub per_look_counts: Vec<u64>,
    pub looks: Vec<u32>,
    pub covered: u64,
    pub stopped: u64,
    pub k: f64,
}

impl SimResult {
    /// Coverage is at least 1 − k within `slack` Monte Carlo standard errors.
    pub fn coverage_ok(&self, slack: f64) -> bool {
        self.coverage_estimate >= 1.0 - self.k - slack * self.mc_stderr
    }

    /// Rejection rate at θ* is at most k within `slack` standard errors.
    pub fn bound_ok(&self, slack: f64) -> bool {
        self.stop_fraction <= self.k + slack * self.mc_stderr
    }
}

struct Replication {
    stop_look: Option<usize>,
    covered: bool,
}

fn replicate(
    config: &SimConfig,
    prior: &PriorSpec,
    k: f64,
    looks: &[u32],
    index: u64,
) -> Result<Replication> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index);
    let lambda = config.unit_var.sqrt();
    let ln_k = k.ln();

    let mut sum = 0.0;
    let mut drawn = 0u32;
    let mut last = None;
    for (i, &n) in looks.iter().enumerate() {
        while drawn < n {
            let z: f64 = StandardNormal.sample(&mut rng);
            sum += config.true_theta + lambda * z;
            drawn += 1;
        }
        let data = SummaryData::new(sum / n as f64, lambda / (n as f64).sqrt())?;
        let stop = ln_bf01(&data, prior, config.true_theta) < ln_k;
        last = Some(data);
        if stop {
            let si = support_interval(&data, &config.method)?;
            return Ok(Replication {
                stop_look: Some(i),
                covered: si.contains(config.true_theta),
            });
        }
    }
    let data = last.expect("at least one look");
    let si = support_interval(&data, &config.method)?;
    Ok(Replication {
        stop_look: None,
        covered: si.contains(config.true_theta),
    })
}

/// Simulate the interval reported at the stopping look (or the last look).
pub fn simulate_coverage(config: &SimConfig) -> Result<SimResult> {
    config.validate()?;
    let (prior, k) = config.prior_and_k()?;
    let looks = config.regime.looks();

    let reps = (0..config.replications)
        .into_par_iter()
        .map(|i| replicate(config, &prior, k, &looks, i))
        .collect::<Result<Vec<_>>>()?;

    let mut per_look_counts = vec![0u64; looks.len()];
    let mut covered = 0u64;
    for r in &reps {
        if let Some(i) = r.stop_look {
            per_look_counts[i] += 1;
        }
        covered += r.covered as u64;
    }
    let stopped: u64 = per_look_counts.iter().sum();
    let total = config.replications as f64;
    let p = covered as f64 / total;
    Ok(SimResult {
        replications: config.replications,
        coverage_estimate: p,
        mc_stderr: (p * (1.0 - p) / total).sqrt(),
        stop_fraction: stopped as f64 / total,
        per_look_counts,
        looks,
        covered,
        stopped,
        k,
    })
}

/// Estimate P{BF₀₁(x; θ*) < k} when θ* is the true value.
///
/// Runs the same experiment as [`simulate_coverage`]; the bound holds when
/// `stop_fraction <= k + 3·mc_stderr` (see [`SimResult::bound_ok`]).
pub fn universal_bound_check(config: &SimConfig) -> Result<SimResult> {
    simulate_coverage(config)
}
