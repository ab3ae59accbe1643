use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{what} needs {size} entries, above the cap of {cap} (raise it with --{flag})")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
        flag: &'static str,
    },

    #[error("the zero polynomial is not accepted here")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous (degrees {low} and {high} both occur)")]
    NotHomogeneous { low: u32, high: u32 },

    #[error("not set-multilinear for the given partition: {0}")]
    NotSetMultilinear(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Waring decomposition: {0}")]
    InvalidWaring(String),

    #[error("constant polynomial has no multiplication table")]
    ConstantPolynomial,

    #[error("format error on line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
