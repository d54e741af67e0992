//! `--config job.json`: keys of a flat JSON object are expanded into flags and
//! spliced in right after the subcommand, ahead of the user's own flags. The
//! subcommands override repeated flags, so the command line wins.

use std::collections::HashSet;
use std::ffi::OsString;
use std::fs;

use anyhow::{bail, Context};
use serde_json::Value;

use crate::failure::Failure;

const SUBCOMMANDS: [&str; 6] = [
    "calibrate",
    "map",
    "bf-curve",
    "design",
    "simulate",
    "schema",
];

// Flags that stand in for each other. A command-line flag from one side
// drops config keys from the other so the two never meet.
const ALTERNATIVES: [(&[&str], &[&str]); 4] = [
    (&["estimate", "se"], &["ci-lower", "ci-upper", "ci-level"]),
    (&["k"], &["ci-level"]),
    (
        &["jeffreys"],
        &["prior", "prior-mean", "prior-sd", "prior-scale"],
    ),
    (&["n"], &["max-looks"]),
];

pub fn splice(mut argv: Vec<OsString>) -> Result<Vec<OsString>, Failure> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let text = fs::read_to_string(&path).with_context(|| format!("reading config file {path}"))?;
    let job: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("config file {path} is not valid JSON: {e}")))?;
    let Value::Object(entries) = job else {
        return Err(Failure::usage(format!(
            "config file {path} must hold a JSON object"
        )));
    };

    let mut at = argv.iter().position(|a| SUBCOMMANDS.iter().any(|s| a == s));
    if at.is_none() {
        if let Some(Value::String(cmd)) = entries.get("command") {
            argv.insert(1, cmd.into());
            at = Some(1);
        }
    }
    let Some(at) = at else {
        return Ok(argv);
    };

    let given = user_flags(&argv[at + 1..]);
    let mut flags = Vec::new();
    for (key, value) in &entries {
        if key == "command" || key == "config" {
            continue;
        }
        let name = key.replace('_', "-");
        if given.contains(name.as_str()) || displaced(&name, &given) {
            continue;
        }
        flags.extend(
            expand(&name, value).map_err(|e| Failure::usage(format!("config file {path}: {e}")))?,
        );
    }
    argv.splice(at + 1..at + 1, flags.into_iter().map(OsString::from));
    Ok(argv)
}

fn config_path(argv: &[OsString]) -> Option<String> {
    let mut it = argv.iter().map(|a| a.to_string_lossy());
    while let Some(arg) = it.next() {
        if arg == "--" {
            break;
        }
        if arg == "--config" {
            return it.next().map(|p| p.into_owned());
        }
        if let Some(p) = arg.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

fn user_flags(args: &[OsString]) -> HashSet<String> {
    args.iter()
        .filter_map(|a| a.to_str())
        .filter_map(|a| a.strip_prefix("--"))
        .map(|a| a.split('=').next().unwrap_or(a).to_string())
        .collect()
}

fn displaced(name: &str, given: &HashSet<String>) -> bool {
    ALTERNATIVES.iter().any(|(a, b)| {
        (b.contains(&name) && a.iter().any(|f| given.contains(*f)))
            || (a.contains(&name) && b.iter().any(|f| given.contains(*f)))
    })
}

fn expand(name: &str, value: &Value) -> anyhow::Result<Vec<String>> {
    Ok(match value {
        Value::Null | Value::Bool(false) => vec![],
        Value::Bool(true) => vec![format!("--{name}")],
        Value::Number(n) => vec![format!("--{name}={n}")],
        Value::String(s) => vec![format!("--{name}={s}")],
        Value::Array(_) | Value::Object(_) => {
            bail!("key {name:?} must be a number, string or boolean")
        }
    })
}
