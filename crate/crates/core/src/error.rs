use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("empty matrix")]
    Empty,
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("channel entry ({row}, {col}) = {value} is outside [0, 1]")]
    ProbabilityOutOfRange { row: usize, col: usize, value: String },
    #[error("channel row {row} sums to {sum}, expected 1")]
    RowSum { row: usize, sum: String },
    #[error("distance entry ({row}, {col}) = {value} is negative")]
    NegativeDistance { row: usize, col: usize, value: String },
    #[error("distance diagonal entry ({index}, {index}) is {value}, expected 0")]
    NonZeroDiagonal { index: usize, value: String },
    #[error("distance is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },
    #[error("distance is not a semimetric: d({row}, {col}) = 0")]
    NotSemimetric { row: usize, col: usize },
    #[error("weight is not strictly positive at subset mask {mask}")]
    NonPositiveWeight { mask: usize },
    #[error("negative weight at subset mask {mask}")]
    NegativeWeight { mask: usize },
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("empty code")]
    EmptyCode,
    #[error("subset vector for n = {n} must have {expected} entries, found {found}")]
    SubsetLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("{what} = {value} exceeds the supported limit {limit}")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("minterm vector is not realizable: entry at mask {mask} is {value}")]
    NotRealizable { mask: usize, value: String },
    #[error("search needs a finite bound for subset mask {mask}")]
    Unbounded { mask: usize },
    #[error("invalid scaling witness: {0}")]
    InvalidWitness(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("bit word length mismatch: {left} vs {right}")]
    WordLength { left: usize, right: usize },
    #[error("distance entry ({row}, {col}) is not an integer")]
    NonIntegerDistance { row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
