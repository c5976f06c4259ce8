use crate::exactalg::Variable;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: remainder is nonzero")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the zero polynomial has no weight")]
    ZeroPolynomial,
    #[error("no value assigned to variable {0}")]
    MissingAssignment(Variable),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid Maya sequence: {0}")]
    InvalidMaya(String),
    #[error("truncation N={requested} is below the minimum {minimum}")]
    TruncationTooSmall { requested: usize, minimum: usize },
    #[error("specialized denominator is not 1")]
    DenominatorNotUnit,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("H_0 is singular, so the compression a of g is not invertible")]
    SingularA,
    #[error("frame determinant did not stabilize up to T={bound}")]
    NotStabilized { bound: usize },
    #[error("invalid grassmannian point: {0}")]
    InvalidPoint(String),
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("series is missing coefficient H_{0}")]
    InsufficientDegree(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
