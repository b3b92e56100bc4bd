use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} has flag length 0; every flag length must be at least 1")]
    EmptyFlag { point: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("flag at point {point} is not monotone at position {position}")]
    NotMonotone { point: usize, position: usize },
    #[error("rank must be nonnegative")]
    NegativeRank,
    #[error("dimension vectors belong to different weight types")]
    WeightTypeMismatch,
    #[error("integer overflow")]
    Overflow,
    #[error("invalid part-count bounds: min {min}, max {max:?}")]
    InvalidBounds { min: usize, max: Option<usize> },
    #[error("dimension vector has rank 0")]
    ZeroRank,
    #[error("genus {0} is below 2")]
    GenusTooLow(u32),
}
