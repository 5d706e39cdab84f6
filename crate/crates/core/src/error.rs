use thiserror::Error;

/// Errors raised by the library.
///
/// `Internal` and `Engine` signal that a computed identity failed; they are
/// never expected on valid input and are surfaced as verification failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight has {got} coordinates, rank {rank} needs {}", rank + 1)]
    RankMismatch { rank: usize, got: usize },

    #[error("root index {index} out of range for rank {rank}")]
    IndexOutOfRange { rank: usize, index: usize },

    #[error("weights {0:?} and {1:?} lie in different cosets of the root lattice")]
    CosetMismatch(Vec<i64>, Vec<i64>),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight {mu:?} is not below {lambda:?} in the Bruhat order")]
    NotBelow { mu: Vec<i64>, lambda: Vec<i64> },

    #[error("root must be positive")]
    NotPositive,

    #[error("invalid partition {0:?}: {1}")]
    InvalidPartition(Vec<i64>, &'static str),

    #[error("partition {parts:?} has more than {} parts", rank + 1)]
    TooManyParts { rank: usize, parts: Vec<i64> },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal identity failed: {0}")]
    Internal(String),

    #[error("wall-crossing engine failure at wall {wall}, atom {atom}: {reason}")]
    Engine {
        wall: String,
        atom: usize,
        reason: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
