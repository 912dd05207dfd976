//! Error types shared across the crate.

use crate::partition::Partition;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("parts must be strictly positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("truncation degrees differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("cannot shift down by {shift}: nonzero coefficient in degree {degree}")]
    NonzeroLowOrder { shift: usize, degree: usize },
    #[error("shift {0} must be even")]
    OddShift(usize),
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(u32),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("unsupported partition shape {0} (largest part exceeds oracle width limit)")]
    UnsupportedShape(Partition),
    #[error("negative-degree coefficient while shifting the series for {0}")]
    NegativeDegree(Partition),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AssembleError {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(u32),
    #[error("oracle capability exceeded for partitions: {}",
            .0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "))]
    OracleCapability(Vec<Partition>),
    #[error(transparent)]
    Core(#[from] CoreError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("partition size {0} exceeds the brute-force guard {1}")]
    SizeGuard(u32, u32),
    #[error("partition has {0} parts, more than the rank {1}")]
    TooManyParts(usize, u32),
    #[error("rank {0} below the stable range for sizes {1} + {2}")]
    BelowStableRange(u32, u32, u32),
}
