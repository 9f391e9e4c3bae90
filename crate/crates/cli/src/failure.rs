use std::fmt;
use std::process::ExitCode;

use tableaux_core::Error;

/// Why a command did not succeed. The exit codes are part of the interface:
/// 1 for a failed verification or disagreement, 2 for bad usage or a budget.
#[derive(Debug)]
pub enum Failure {
    Mismatch(String),
    Usage(String),
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Mismatch(_) => ExitCode::from(1),
            Failure::Usage(_) => ExitCode::from(2),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch(m) | Failure::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget(_)
            | Error::Precondition { .. }
            | Error::Parse(_)
            | Error::InvalidPartition(_)
            | Error::NotAVertex(_)
            | Error::DimensionMismatch { .. }
            | Error::DegreeBound { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Mismatch(e.to_string()),
        }
    }
}
