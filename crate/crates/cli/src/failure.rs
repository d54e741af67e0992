use std::fmt;

/// Why a command did not succeed. Each variant maps to one exit code.
#[derive(Debug)]
pub enum Failure {
    /// Malformed or inconsistent arguments (exit 2).
    Usage(String),
    /// A well-formed request with no result: empty interval, undefined
    /// mapping, infeasible design (exit 3).
    NoResult(String),
    /// I/O and anything unexpected (exit 1).
    Internal(anyhow::Error),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::NoResult(_) => 3,
            Failure::Internal(_) => 1,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) | Failure::NoResult(msg) => f.write_str(msg),
            Failure::Internal(err) => write!(f, "{err:#}"),
        }
    }
}

impl From<supcal::Error> for Failure {
    fn from(err: supcal::Error) -> Self {
        use supcal::Error::*;
        match err {
            MappingUndefined { .. } => Failure::NoResult(err.to_string()),
            NoSignChange { .. } | NonFinite { .. } => Failure::Internal(err.into()),
            _ => Failure::Usage(err.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure::Internal(err)
    }
}
