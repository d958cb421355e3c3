use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the command-line front end, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: line {line}: {reason}")]
    NgFile {
        path: PathBuf,
        line: u64,
        reason: String,
    },

    #[error(transparent)]
    Core(#[from] kunz_core::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for usage errors, 4 for overflow, 3 for every other data or
    /// validation failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(kunz_core::Error::Overflow(_)) => 4,
            _ => 3,
        }
    }
}
