use std::path::PathBuf;

use thiserror::Error;

/// A law claimed by a structure file that does not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimFailure {
    pub law: String,
    pub witness: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum WorkbenchError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot parse structure file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unknown law {0:?} in claims")]
    UnknownClaim(String),
    #[error("{name} fails its claims: {}", render_failures(.failures))]
    Claims { name: String, failures: Vec<ClaimFailure> },
    #[error("no corpus entry or file named {0:?}")]
    UnknownStructure(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ringoid_core::Error),
}

fn render_failures(failures: &[ClaimFailure]) -> String {
    failures.iter().map(|f| format!("{} (witness {:?})", f.law, f.witness)).collect::<Vec<_>>().join(", ")
}

impl WorkbenchError {
    /// 1 for a failed theorem assertion, 3 for an exceeded cap, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            WorkbenchError::Core(ringoid_core::Error::TheoremViolation(_)) => 1,
            WorkbenchError::Core(ringoid_core::Error::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = WorkbenchError> = std::result::Result<T, E>;
