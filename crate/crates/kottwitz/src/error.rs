use thiserror::Error;

#[derive(Debug, Error)]
pub enum KottwitzError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, KottwitzError>;
