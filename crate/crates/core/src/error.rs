use thiserror::Error;

/// Errors shared by every module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("placement error: {0}")]
    Placement(String),
    #[error("degenerate coordinates: vertex {vertex} lies on segment ({a}, {b})")]
    Degeneracy { a: usize, b: usize, vertex: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("solver did not converge (residual {0:e})")]
    Numerical(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
