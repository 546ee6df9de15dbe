use alloc::string::String;

use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the algebraic and combinatorial operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient space must have at least one factor, each of dimension >= 1")]
    InvalidAmbient,
    #[error("classes live on different ambient spaces")]
    AmbientMismatch,
    #[error("multidegree has {got} entries, ambient has {expected} factors")]
    DegreeLength { expected: usize, got: usize },
    #[error("class has constant term {0}, expected 1")]
    NonUnitConstant(BigInt),

    #[error("configuration has no degree columns")]
    NoColumns,
    #[error("row {row} has {got} degree entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("normalization removes every row or column")]
    Annihilated,
    #[error("configuration is not a Calabi-Yau threefold configuration")]
    NotCicy,
    #[error("configuration is block-diagonal")]
    BlockDiagonal,

    #[error("polarization must have positive entries on every factor")]
    NotAmple,
    #[error("no rule for a nested piece of dimension {dimension}")]
    UnsupportedBaseCase { dimension: i64 },
    #[error("odd Euler number {0}")]
    OddEuler(BigInt),
    #[error("{got} divisors given, zero-dimensional intersection needs {expected}")]
    PointCountMismatch { expected: usize, got: usize },
    #[error("value {0} does not fit the target integer type")]
    OutOfRange(BigInt),

    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("row {row} is not a contraction site")]
    NoSite { row: usize },
    #[error("negative ODP count {0}")]
    NegativeOdpCount(BigInt),
    #[error(
        "Euler bookkeeping disagrees: closed formula {closed}, Gauss-Bonnet difference {direct}"
    )]
    EulerDisagreement { closed: BigInt, direct: BigInt },
    #[error("rank bound {rank} outside 0..={max}")]
    RankOutOfRange { rank: i64, max: i64 },

    #[error("chain construction failed: {0}")]
    Connect(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
