use lie_core::LieError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YoungError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("symbol {symbol} outside 1..={n}")]
    SymbolRange { symbol: usize, n: usize },
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("{boxes} boxes exceed the budget of {budget}")]
    Budget { boxes: usize, budget: usize },
    #[error("unsupported Theta pattern {0}; use enumerate_fillings_a")]
    UnsupportedTheta(String),
    #[error("{0} is not a primitive element of the even-size monoid")]
    NotInBasis(String),
    #[error("{0} is not dominant integral")]
    NotDominant(String),
}

pub type Result<T> = std::result::Result<T, YoungError>;
