//! Crate-wide error type with a stable mapping onto process exit codes.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed request: bad descriptor, argument out of range, wrong input kind.
    #[error("usage error: {0}")]
    Usage(String),

    /// Input violates an operation precondition (degree, injectivity, connectivity, ...).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A verifier rejected a certificate or a construction input.
    #[error("verification failed: {0}")]
    Verification(String),

    /// The instance exceeds the theorem-scope budget (edge budget, host capacity).
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An exhaustive search ran out of its configured budget; the outcome is unknown.
    #[error("resource budget exceeded: {0}")]
    Resource(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    /// Exit code contract: 0 success/valid/YES, 1 invalid/NO, 2 usage,
    /// 3 resource budget, 4 capacity.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Parse { .. } => 2,
            Error::Invalid(_) | Error::Verification(_) => 1,
            Error::Resource(_) => 3,
            Error::Capacity(_) => 4,
            Error::Io(_) => 2,
        }
    }
}
