use std::path::PathBuf;

use proximity::{BenchError, QueryError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    InvalidInput { path: PathBuf, message: String },
    #[error("invalid scene: {0}")]
    Scene(#[from] BenchError),
    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{algorithm} failed: {source}")]
    Algorithm {
        algorithm: String,
        source: QueryError,
    },
    #[error("{0} DyOP results fell below the oracle")]
    ConservativeViolation(usize),
    #[error("{0} records differ from the placement distance by more than 1e-6")]
    Mismatch(usize),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::InvalidInput { .. } | CliError::Scene(_) | CliError::Output { .. } => 2,
            CliError::ConservativeViolation(_) => 3,
            CliError::Algorithm { .. } => 4,
            CliError::Mismatch(_) => 5,
        }
    }

    pub(crate) fn input(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        CliError::InvalidInput {
            path: path.into(),
            message: message.to_string(),
        }
    }

    pub(crate) fn output(path: impl Into<PathBuf>, source: impl Into<std::io::Error>) -> Self {
        CliError::Output {
            path: path.into(),
            source: source.into(),
        }
    }
}
