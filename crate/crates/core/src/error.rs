use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Bad caller input: out-of-range vertices, empty sets, malformed files.
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A documented precondition of an operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("decomposition corruption: {0}")]
    Corruption(String),

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    /// An oracle query whose attached values cannot come from any real graph.
    #[error("malformed query: {0}")]
    MalformedQuery(String),

    /// The oracle answered inconsistently (no acceptance, double acceptance, ...).
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("unknown problem id `{0}`")]
    UnknownProblem(String),

    #[error("unknown value system `{0}`")]
    UnknownSystem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
