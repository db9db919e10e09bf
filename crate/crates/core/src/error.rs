use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("no boxes: the empty partition has no removable box")]
    NoBoxes,

    #[error("not a covering pair: {lam} does not cover {mu}")]
    NotCovering { lam: String, mu: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("size mismatch: partition of {partition} vs cycle type of {cycle_type}")]
    SizeMismatch { partition: usize, cycle_type: usize },

    #[error("degree {n} out of range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },

    #[error("oracle scale exceeded: {oracle} supports n <= {limit}, got n = {n}")]
    ScaleExceeded { oracle: &'static str, n: usize, limit: usize },

    #[error("permutation does not fix the point 1")]
    DoesNotFixOne,

    #[error("transposition value needs n >= 2")]
    DegreeTooSmall,

    #[error("invalid oracle: {0}")]
    InvalidOracle(String),

    #[error("invalid table file: {0}")]
    InvalidTable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
