use thiserror::Error;

use crate::point::Point;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generators have gcd {gcd}, but the gcd must be 1 for the complement to be finite")]
    NotCofinite { gcd: u64 },

    #[error("input exceeds the supported range: {0}")]
    RangeExceeded(String),

    #[error("gap set contains the zero point")]
    ZeroGap,

    #[error("complement is not closed under addition: {s1:?} + {s2:?} lands in the gap set")]
    NotAMonoid { s1: Point, s2: Point },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coordinate sum {sum} is below the split target {target}")]
    InsufficientSum { sum: u64, target: u64 },

    #[error("sequence is not weakly decreasing")]
    NotSorted,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("genus bound {genus_bound} is below {minimum}, the least genus at multiplicity {multiplicity}")]
    InfeasibleBound {
        multiplicity: u32,
        genus_bound: u32,
        minimum: u32,
    },
}
