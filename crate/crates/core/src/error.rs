use thiserror::Error;

/// Library-wide error type.
///
/// `Validation` covers bad inputs caught before any computation starts;
/// `Numerical` covers failures inside a computation (LAPACK convergence,
/// domain errors at spectrum edges, non-normalized inputs discovered late).
#[derive(Debug, Error)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
