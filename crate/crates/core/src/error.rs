use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid dimensions r={r}, n={n}: need 1 <= r <= n-1")]
    BadDimensions { r: usize, n: usize },

    #[error("gcd(r, n) = {gcd} for r={r}, n={n}; the construction needs coprime r and n")]
    NotCoprime { r: usize, n: usize, gcd: usize },

    #[error("expected {expected} values for l, got {got}")]
    WrongLCount { expected: usize, got: usize },

    #[error("l_{index} = {value} outside the admissible range [{lo}, {hi}]")]
    LOutOfRange { index: usize, value: usize, lo: usize, hi: usize },

    #[error("index tuple {0:?} is not strictly increasing inside [1, n]")]
    BadIndexTuple(Vec<usize>),

    #[error("tableau is not rectangular: {0}")]
    NotRectangular(String),

    #[error("row count mismatch: {left} vs {right}")]
    RowMismatch { left: usize, right: usize },

    #[error("expected {expected} columns, found {found}")]
    WrongColumnCount { expected: usize, found: usize },

    #[error("lattice point is not in P_{d}: {reason}")]
    NotInPd { d: usize, reason: String },

    #[error("tableau is not a T-invariant standard tableau of degree {d}")]
    NotInvariant { d: usize },

    #[error("swap at ({row}, {col}) rejected: {reason}")]
    SwapRejected { row: usize, col: usize, reason: String },

    #[error("shuffle relation needs alpha_k > beta_k at k={k}")]
    NoViolation { k: usize },

    #[error("could not sample a full-rank point after {0} attempts")]
    SamplingFailed(usize),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
