use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid outcome space: {0}")]
    InvalidSpace(String),

    #[error("invalid credence function: {0}")]
    InvalidCredence(String),

    #[error("invalid probability weights: {0}")]
    InvalidWeights(String),

    #[error("invalid scoring rule: {0}")]
    InvalidRule(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A rule's formula is undefined at the given credence value; the
    /// offending event is reported by its label key.
    #[error("{rule} score undefined at event {{{event}}}: {detail}")]
    Domain {
        rule: String,
        event: String,
        detail: String,
    },

    /// Extended inner product mixed +inf and -inf terms.
    #[error("indeterminate form: extended sum mixes +inf and -inf terms")]
    IndeterminateForm,

    /// Every sampled probability scored infinite in some coordinate.
    #[error("empty sample: every sampled score had an infinite coordinate")]
    EmptySample,

    #[error("LP solver failure: {0}")]
    Solver(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
