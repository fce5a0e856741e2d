//! Library side of the `mirrorcayley` command: the form registry, the on-disk
//! cache, output formatting and the verification suites.

pub mod cache;
pub mod output;
pub mod registry;
pub mod suites;

use thiserror::Error;

/// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 internal error.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown form {0:?}")]
    UnknownForm(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownForm(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) | CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

/// Errors from the computation crates are internal errors.
pub fn internal<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Internal(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}
