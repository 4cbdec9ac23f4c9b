use thiserror::Error;

#[derive(Debug, Error)]
pub enum MonoidError {
    #[error(transparent)]
    Lie(#[from] lie_core::LieError),
    #[error(transparent)]
    Young(#[from] young_a::YoungError),
    #[error(transparent)]
    Bcd(#[from] doubled_bcd::BcdError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error("{0} is not dominant integral for {1}")]
    NotDominant(String, String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl MonoidError {
    /// True when the error comes from a box or dimension budget.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            MonoidError::Young(young_a::YoungError::Budget { .. })
                | MonoidError::Bcd(doubled_bcd::BcdError::Budget { .. })
                | MonoidError::Bcd(doubled_bcd::BcdError::Young(young_a::YoungError::Budget { .. }))
                | MonoidError::Oracle(oracle::OracleError::Budget { .. })
        )
    }
}

pub type Result<T> = std::result::Result<T, MonoidError>;
