use exact_field::{FieldError, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HolantError {
    #[error("index out of range: {0}")]
    Index(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("size cap exceeded: {0}")]
    Cap(String),
    #[error("zero signature: {0}")]
    ZeroSignature(String),
    #[error("unknown name: {0}")]
    Unknown(String),
    #[error("singular transform")]
    Singular,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Number(#[from] ParseError),
    #[error("{file}:{line}: {msg}")]
    Format { file: String, line: usize, msg: String },
    #[error("{0}")]
    Comb(#[from] boolcomb::CombError),
}

pub type Result<T> = std::result::Result<T, HolantError>;
