use thiserror::Error;

use crate::ring::RingSpec;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingSpec, right: RingSpec },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    /// An operation would materialize more objects than the configured cap.
    #[error("guard exceeded: {what} needs {count} items, cap is {cap}")]
    GuardExceeded { what: String, count: u128, cap: u128 },

    #[error("no nonzero codeword")]
    NoNonzeroCodeword,

    #[error("input is not a linear code: {0}")]
    NotLinear(String),

    #[error("transform is not integral: {0}")]
    NonIntegral(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(String),

    /// Construction preconditions that failed, one message per violation.
    #[error("precondition violated: {}", .0.join("; "))]
    Precondition(Vec<String>),

    #[error("certification failed: {0}")]
    Certification(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
