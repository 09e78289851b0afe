use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("scalar field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("{0} is not divisible by {1}")]
    NotDivisible(String, String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("elements belong to different algebras")]
    ParameterMismatch,

    #[error("singular matrix")]
    Singular,

    /// A mathematical invariant that must hold for a correct build was violated.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
