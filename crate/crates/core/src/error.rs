use thiserror::Error;

/// Errors raised by the samplers, encoders and metric routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {vertex} out of range (tree has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("invalid labels: {0}")]
    InvalidLabels(String),

    #[error("{what} exceeded its budget of {budget} attempts")]
    BudgetExhausted { what: &'static str, budget: u64 },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
