use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("unsupported rank {rank} for family {family}")]
    UnsupportedRank { family: String, rank: usize },
    #[error("weight has {got} coordinates, expected {expected} for {ty}")]
    LengthMismatch { ty: String, expected: usize, got: usize },
    #[error("cannot parse {what} from {token:?}")]
    Parse { what: &'static str, token: String },
    #[error("rank {rank} exceeds the Weyl enumeration bound {bound}")]
    RankBound { rank: usize, bound: usize },
    #[error("{op} requires a classical type, got {ty}")]
    NotClassical { op: &'static str, ty: String },
    #[error("simple root index {index} out of range for {ty}")]
    ThetaIndex { index: usize, ty: String },
    #[error("invalid real form: {0}")]
    InvalidForm(String),
}

pub type Result<T> = std::result::Result<T, LieError>;

pub(crate) fn parse_err(what: &'static str, token: &str) -> LieError {
    LieError::Parse { what, token: token.to_string() }
}
