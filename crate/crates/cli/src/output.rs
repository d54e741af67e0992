use std::io::Write;

use serde::Serialize;
use supcal::RealInterval;

use crate::failure::Failure;

/// Version of every `--json` object. Bump together with the files in `schemas/`.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct IntervalJson {
    pub kind: &'static str,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
}

impl From<&RealInterval> for IntervalJson {
    fn from(iv: &RealInterval) -> Self {
        let kind = match iv {
            RealInterval::Empty => "empty",
            RealInterval::Point { .. } => "point",
            RealInterval::Bounded { .. } => "bounded",
            RealInterval::WholeLine => "whole_line",
        };
        let (lower, upper) = iv.endpoints().unzip();
        IntervalJson { kind, lower, upper }
    }
}

pub fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(anyhow::Error::from)?;
    let mut out = std::io::stdout().lock();
    writeln!(out, "{text}").map_err(anyhow::Error::from)?;
    Ok(())
}

/// Two decimals, without a negative zero.
pub fn fixed2(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

/// At most two decimals, trailing zeros dropped: 2 -> "2", 0.10 -> "0.1".
pub fn trim2(x: f64) -> String {
    let s = fixed2(x);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// A level k, with its reciprocal when k < 1: "10", "0.15 (1/6.83)".
pub fn level_k(k: f64) -> String {
    if k < 1.0 && k > 0.0 {
        format!("{} (1/{})", trim2(k), trim2(1.0 / k))
    } else {
        trim2(k)
    }
}

pub fn percent(level: f64) -> String {
    format!("{}%", trim2(100.0 * level))
}

pub fn interval_text(iv: &RealInterval) -> String {
    match iv {
        RealInterval::Empty => "empty".to_string(),
        RealInterval::Point { at } => format!("[{0},{0}] (single point)", fixed2(*at)),
        RealInterval::Bounded { lower, upper } => {
            format!("[{},{}]", fixed2(*lower), fixed2(*upper))
        }
        RealInterval::WholeLine => "(-inf,inf)".to_string(),
    }
}
