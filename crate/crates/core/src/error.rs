use thiserror::Error;

use crate::algebra::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse rational number {0:?}")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    #[error("algebra failed validation: {0}")]
    InvalidAlgebra(ValidationReport),

    #[error("algebra is not split basic: {0}")]
    NotSplitBasic(String),

    #[error("module axioms violated: {0}")]
    InvalidModule(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("not a module over k[x]/(x^2): {0}")]
    NotDualNumbers(String),

    #[error("invalid subalgebra embedding: {0}")]
    InvalidEmbedding(String),

    #[error("format error at {location}: {message}")]
    Format { location: String, message: String },

    #[error(transparent)]
    Scalar(#[from] ParseScalarError),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub type Result<T> = std::result::Result<T, Error>;
