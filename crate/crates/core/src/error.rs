use thiserror::Error;

/// Errors surfaced by the library and mapped onto CLI exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{module}: capacity exceeded for {what} (requested {requested}, limit {limit})")]
    Capacity {
        module: &'static str,
        what: &'static str,
        requested: u64,
        limit: u64,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size mismatch: expected a partition of {expected}, got one of {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("no acceptance after {attempts} attempts; try a different u")]
    AcceptanceFailure { attempts: u64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn capacity(
        module: &'static str,
        what: &'static str,
        requested: usize,
        limit: usize,
    ) -> Self {
        Error::Capacity {
            module,
            what,
            requested: requested as u64,
            limit: limit as u64,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
