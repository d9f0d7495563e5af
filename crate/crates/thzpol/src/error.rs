//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the numeric core.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A domain-type invariant was violated (bad geometry, bad mode index,
    /// out-of-range parameter).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A query fell outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two series that must be aligned have different lengths or grids.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// The input is degenerate (all zero, empty band, ...) and the requested
    /// quantity is undefined on it.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A file could not be parsed; carries the 1-based line number where
    /// the problem was found.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
