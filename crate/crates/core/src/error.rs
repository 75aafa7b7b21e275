use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("wrong number of arguments: form of degree {degree} given {got} vectors")]
    Arity { degree: usize, got: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown name `{name}`; available: {available}")]
    UnknownName { name: String, available: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("element is not in the ambient family: {0}")]
    NotInFamily(String),
    #[error("repeated point in cross-ratio input")]
    RepeatedRoot,
    #[error("input has a nonzero w0-component")]
    HasW0Component,
    #[error("holonomy iteration exceeded {0} sweeps")]
    SweepCap(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
