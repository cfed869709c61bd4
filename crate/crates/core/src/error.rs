use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in rings with {0} and {1} variables")]
    ContextMismatch(usize, usize),
    #[error("polynomial is sorted under {found} but the basis uses {expected}")]
    OrderMismatch { expected: String, found: String },
    #[error("monomials have different degrees {0} and {1}")]
    DegreeMismatch(u32, u32),
    #[error("coordinate change matrix is singular")]
    SingularMatrix,
    #[error("the zero ideal is not supported here")]
    ZeroIdeal,
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("Hilbert function is not admissible: {0}")]
    Inadmissible(String),
    #[error("Hilbert data too short: {0}")]
    PrefixTooShort(String),
    #[error("ideal is not strongly stable, {0} is missing")]
    NotStronglyStable(String),
    #[error("search cap of {0} nodes exceeded")]
    SearchCap(u64),
    #[error("initial ideals of {0} random coordinate changes disagree")]
    GinDisagreement(usize),
    #[error("no weight vector with entries in [0, {0}] realizes the target")]
    WeightNotFound(i64),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown monomial order `{0}`")]
    UnknownOrder(String),
    #[error("dataset: {0}")]
    Dataset(String),
    #[error("family sampler: {0}")]
    Family(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
