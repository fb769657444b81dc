use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series order {order} is too small (need at least {required})")]
    DegenerateOrder { order: usize, required: usize },

    #[error("series has a vanishing constant term and cannot be inverted")]
    NonInvertible,

    #[error("logarithm or fractional power requested at a branch point (constant term is zero)")]
    BranchPoint,

    #[error("f'(0) vanishes; the Schwarzian is singular at the origin")]
    CriticalPoint,

    #[error("inner series of a composition must have zero constant term")]
    CompositionDomain,

    #[error("series with nonzero constant term is not divisible by z")]
    NotDivisible,

    #[error("non-finite coefficient at index {index}")]
    NonFinite { index: usize },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("iteration did not converge after {iterations} steps")]
    NoConvergence { iterations: usize },

    #[error("malformed coefficient file, line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
