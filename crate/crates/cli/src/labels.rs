//! Conventional verbal labels for a Bayes factor or support level k.

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Jeffreys,
    Royall,
    Fisher,
}

impl Scale {
    fn name(self) -> &'static str {
        match self {
            Scale::Jeffreys => "Jeffreys",
            Scale::Royall => "Royall",
            Scale::Fisher => "Fisher",
        }
    }
}

/// Label for level k on `scale`, if the scale names that range. Levels
/// below 1 are labelled by 1/k as evidence against.
pub fn label(scale: Scale, k: f64) -> Option<String> {
    let (strength, against) = if k >= 1.0 {
        (k, false)
    } else {
        (1.0 / k, true)
    };
    let word = match scale {
        Scale::Jeffreys => Some(match strength {
            s if s >= 100.0 => "decisive",
            s if s >= 30.0 => "very strong",
            s if s >= 10.0 => "strong",
            s if s >= 3.0 => "substantial",
            _ => "bare mention",
        }),
        Scale::Royall => match strength {
            s if s >= 64.0 => Some("quite strong indeed"),
            s if s >= 32.0 => Some("quite strong"),
            s if s >= 8.0 => Some("strong"),
            s if s >= 4.0 => Some("weak"),
            _ => None,
        },
        // relative to the likelihood at the estimate, so only k <= 1
        Scale::Fisher => match k {
            k if k > 1.0 => None,
            k if k >= 0.5 => return Some("Fisher: good".to_string()),
            k if k >= 0.2 => return Some("Fisher: fair".to_string()),
            k if k >= 1.0 / 15.0 => return Some("Fisher: poor".to_string()),
            _ => return Some("Fisher: open to grave suspicion".to_string()),
        },
    }?;
    let side = if against { " against" } else { "" };
    Some(format!("{}: {word} evidence{side}", scale.name()))
}
