use thiserror::Error;

#[derive(Debug, Error)]
pub enum BcdError {
    #[error(transparent)]
    Lie(#[from] lie_core::LieError),
    #[error(transparent)]
    Young(#[from] young_a::YoungError),
    #[error("type {0} is not of type B, C or D")]
    NotBcd(String),
    #[error("symbol {symbol} out of range for rank {rank}")]
    SymbolRange { symbol: i32, rank: usize },
    #[error("column {0} is not strongly standard")]
    NotStronglyStandard(String),
    #[error("column heights must be nonincreasing")]
    MalformedShape,
    #[error("{boxes} boxes exceed the budget of {budget}")]
    Budget { boxes: usize, budget: usize },
    #[error("weight {0} is not dominant integral")]
    NotDominant(String),
    #[error("family parameters out of range: {0}")]
    FamilyRange(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("rank {rank} exceeds the bound {bound}")]
    RankBound { rank: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, BcdError>;
