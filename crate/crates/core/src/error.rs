use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown catalog algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("vector {index} of the subspace is not in the span of the ambient space")]
    NotInSpan { index: usize },

    #[error("basis is not closed under multiplication: product of elements {left} and {right} leaves the span")]
    NotClosed { left: usize, right: usize },

    #[error("jet violates the deformation equation at order {order}")]
    InvalidJet { order: usize },

    #[error("2-cochain is not a cocycle")]
    NotACocycle,

    #[error("{theory} complex property fails in degree {degree}: coboundaries are not cocycles")]
    NotAComplex { theory: &'static str, degree: usize },

    #[error("order {k} out of range (jet order {order})")]
    OrderOutOfRange { k: usize, order: usize },

    #[error("matrix of shape {rows}x{cols} exceeds the dense size limit")]
    TooLarge { rows: usize, cols: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
