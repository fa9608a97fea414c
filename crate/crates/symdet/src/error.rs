use thiserror::Error;

use crate::poly::VarId;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable name at byte {offset}")]
    UnknownVariable { offset: usize },
    #[error("exponent overflow at byte {offset} (maximum 2^31 - 1)")]
    ExponentOverflow { offset: usize },
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("polynomial is not symmetric in x1..x{r}")]
    NotSymmetric { r: usize },
    #[error("polynomial is not antisymmetric in x1..x{r}")]
    NotAntisymmetric { r: usize },
    #[error("per-variable degree {found} exceeds bound {bound}")]
    DegreeExceeded { found: i64, bound: i64 },
    #[error("variable {0:?} is outside x1..x{1}")]
    VariableOutOfRange(VarId, usize),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("determinant requires a square matrix ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("column does not fit the coefficient window (degree {degree}, window {window})")]
    WindowOverflow { degree: i64, window: usize },
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed chi vector: expected {expected} ones, found {found}")]
    MalformedChi { expected: usize, found: usize },
    #[error("polynomial of degree {degree} is not monic in {var}")]
    NotMonic { degree: i64, var: String },
    #[error("bound violation: {0}")]
    BoundViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
