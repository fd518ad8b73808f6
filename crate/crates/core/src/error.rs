use thiserror::Error;

/// Errors raised by the exact algebra routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar is not real: {0}")]
    NotReal(String),
    #[error("real number outside Q(sqrt 3): {0}")]
    NotInRealSubfield(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operators do not commute")]
    NotCommuting,
    #[error("operator is not diagonalizable over the declared eigenvalues")]
    NotDiagonalizable,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("vector is not in the subspace")]
    NotInSubspace,
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error("unknown name: {0}")]
    Unknown(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
