use thiserror::Error;

/// Crate-wide error type. Variants mirror the ways a request can be
/// ill-posed: bad arguments to a special function, an overflow guard, an
/// unusable grid, inconsistent quantum numbers, or a verification setup
/// problem.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error in {func}: {msg}")]
    Domain { func: &'static str, msg: String },

    #[error("overflow guard in {func}: {msg}")]
    Overflow { func: &'static str, msg: String },

    #[error("invalid grid: {0}")]
    Grid(String),

    #[error("invalid quantum numbers: {0}")]
    QuantumNumbers(String),

    #[error("invalid physical parameters: {0}")]
    Params(String),

    #[error("invalid state request: {0}")]
    State(String),

    #[error("verification error: {0}")]
    Verify(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain { func, msg: msg.into() }
    }

    pub(crate) fn overflow(func: &'static str, msg: impl Into<String>) -> Self {
        Error::Overflow { func, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
