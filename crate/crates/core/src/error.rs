use thiserror::Error;

use crate::polyfock::Ambient;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(Ambient, Ambient),

    #[error("exterior ambient mismatch: (p,q)=({0},{1}) vs ({2},{3})")]
    ExteriorAmbientMismatch(usize, usize, usize, usize),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("polynomial contains negative variables; pluriharmonic operators act on positive variables only")]
    NegativeVariables,

    #[error("matrix is singular")]
    Singular,

    #[error("half-integer determinant twist {0} needs a designated square root of det(g)")]
    NoSquareRoot(String),

    #[error("designated square root does not square to det(g)")]
    BadSquareRoot,

    #[error("homogeneous component has dimension {dim}, above the cap {cap}")]
    CapExceeded { dim: usize, cap: usize },

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid Levi datum: {0}")]
    InvalidLevi(String),

    #[error("malformed Arthur parameter: {}", .0.join("; "))]
    MalformedParameter(Vec<String>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
