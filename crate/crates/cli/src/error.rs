use std::fmt;

use thiserror::Error;

/// Errors that end a CLI run with exit status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{source_name}:{line}:{column}: {message}")]
    Parse { source_name: String, line: usize, column: usize, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error(transparent)]
    Library(#[from] obstrukt::Error),
}

impl CliError {
    pub fn usage(message: impl fmt::Display) -> Self {
        CliError::Usage(message.to_string())
    }
}
