use thiserror::Error;

/// Errors shared across the crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    ZeroDivisor,

    #[error("operands belong to different variable registries")]
    RegistryMismatch,

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("invalid Poisson-Ore step for `{var}`: {detail}")]
    InvalidStep { var: String, detail: String },

    #[error("operation requires a graded tower: {0}")]
    NotGraded(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("classical part of a commutator does not vanish: {0}")]
    NonvanishingClassicalPart(String),

    #[error("bracket table is not Poisson: {0}")]
    NotPoisson(String),

    #[error("DE-data is not convertible to an iterated Ore extension: {0}")]
    NotIterated(String),

    #[error("invalid isomorphism witness: {0}")]
    InvalidWitness(String),

    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },

    #[error("unknown variable name `{0}`")]
    UnknownVariable(String),

    #[error("{file}:{line}: {msg}")]
    Format {
        file: String,
        line: usize,
        msg: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
