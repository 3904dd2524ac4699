use thiserror::Error;

use crate::families::FamilyId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),

    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),

    #[error("bad dimension {dim} for {context}")]
    BadDimension { dim: usize, context: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("matrix is singular (elimination step {step})")]
    Singular { step: usize },

    #[error("parameter sampling exhausted after {attempts} attempts for {context}")]
    SamplingExhausted { attempts: usize, context: String },

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("family {family} has no parameter {name:?}")]
    UnknownParam { family: FamilyId, name: String },

    #[error("family {family} requires parameter {name:?}")]
    MissingParam { family: FamilyId, name: &'static str },

    #[error("parameter {0} given more than once")]
    DuplicateParam(String),

    #[error("length mismatch: {0}")]
    Shape(String),
}
