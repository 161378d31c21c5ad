//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A file could not be ingested at all (I/O, encoding, structure).
    #[error("ingestion error at row {row}: {msg}")]
    Ingest { row: usize, msg: String },

    /// An input that must be non-empty was empty.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// An argument violated a precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A value was outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The input is degenerate for this operation (e.g. zero variance).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Two series that must be aligned have mismatched shape.
    #[error("alignment error: {0}")]
    Alignment(String),

    /// A numeric recursion or estimate left the finite positive range.
    #[error("numeric error at t={t}: {msg}")]
    Numeric { t: usize, msg: String },

    /// Too many work items failed for the aggregate result to be reliable.
    #[error("reliability error: {0}")]
    Reliability(String),

    /// Invalid run configuration.
    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI: 3 config/validation, 4 data, 5 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Argument(_) | Error::Config(_) => 3,
            Error::Ingest { .. }
            | Error::EmptyInput(_)
            | Error::Domain(_)
            | Error::Degenerate(_)
            | Error::Alignment(_)
            | Error::Io(_)
            | Error::Json(_) => 4,
            Error::Numeric { .. } | Error::Reliability(_) => 5,
        }
    }
}
