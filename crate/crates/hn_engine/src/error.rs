use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HnError {
    #[error("profile has no steps")]
    EmptyProfile,
    #[error("cumulative ranks must be strictly increasing")]
    NotStrictlyIncreasingRanks,
    #[error("slopes must be strictly decreasing")]
    NotStrictlyDecreasingSlopes,
    #[error("invalid index sequence: {0}")]
    InvalidSequence(String),
    #[error("model does not match profile: {0}")]
    ModelMismatch(String),
    #[error("intersection table is missing entries: {0}")]
    IncompleteTable(String),
    #[error("intersection table has a negative entry at {0}")]
    NegativeEntry(String),
    #[error("sequence too short, need at least three terms")]
    TooShort,
}
