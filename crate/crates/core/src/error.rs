use thiserror::Error;

/// Errors produced by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid deletion list: {0}")]
    BadDeletionList(String),

    #[error("points are not pairwise distinct (x_{first} = x_{second})")]
    RepeatedPoints { first: usize, second: usize },

    #[error("invalid exponent: {0}")]
    BadExponent(String),

    #[error("zero diagonal entry f({0},{0})")]
    ZeroDiagonal(usize),

    #[error("coefficient p({row},{col}) must vanish for a homogeneous recurrence")]
    PatternViolation { row: usize, col: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, bound: usize) -> Result<()> {
    if index == 0 || index > bound {
        Err(Error::IndexOutOfRange { index, bound })
    } else {
        Ok(())
    }
}
