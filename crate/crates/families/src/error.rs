use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bundle must be nef")]
    NotNef,
    #[error("bundle degree must be positive")]
    NonpositiveDegree,
    #[error("bundle rank must be {expected}, got {got}")]
    WrongRank { expected: u64, got: u64 },
    #[error("rank out of range: {0}")]
    RankRange(String),
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("weight vector is not well formed")]
    NotWellFormed,
    #[error("branch class too small: {0}")]
    BranchTooSmall(String),
    #[error("parameter out of range: {0}")]
    ParamRange(String),
}
