use lie_core::LieError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("dimension {dim} exceeds budget {budget}")]
    Budget { dim: String, budget: u64 },
    #[error("{0} is not a dominant integral weight")]
    NotDominantIntegral(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;
