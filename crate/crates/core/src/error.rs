use thiserror::Error;

/// Errors raised by the verifier.
///
/// Bad input (`InvalidType`, `InvalidDegree`, `DimensionMismatch`, `UnknownFormat`)
/// is separated from `Invariant`, which signals a construction bug rather than
/// a failed verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid simple type: {0}")]
    InvalidType(String),
    #[error("invalid degree bound: {0}")]
    InvalidDegree(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("non-dominant weight {0:?}")]
    NonDominant(Vec<i64>),
    #[error("unknown output format `{0}`")]
    UnknownFormat(String),
    #[error("internal invariant violated in stage `{stage}`: {message}")]
    Invariant {
        stage: &'static str,
        message: String,
    },
}

impl Error {
    pub(crate) fn invariant(stage: &'static str, message: impl Into<String>) -> Self {
        Error::Invariant {
            stage,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
