use std::path::PathBuf;

use newtonbez_core::{Error as CoreError, ScalarParseError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed instance file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad scalar: {0}")]
    Scalar(#[from] ScalarParseError),
    #[error("{0}")]
    Usage(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{failed} verification check(s) failed")]
    VerificationFailed { failed: usize },
}

impl CliError {
    /// 0 success, 1 verification failure, 2 parse/usage error,
    /// 3 precondition violation.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed { .. } => 1,
            CliError::Read { .. }
            | CliError::Write { .. }
            | CliError::Json(_)
            | CliError::Scalar(_)
            | CliError::Usage(_) => 2,
            CliError::Precondition(_) | CliError::Core(_) => 3,
        }
    }
}
