use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected:?}, found {found:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("malformed {kind}: {reason}")]
    Malformed { kind: &'static str, reason: String },

    #[error("budget exceeded: {what} needs {needed}, limit is {limit} (raise EXC_BUDGET)")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("property violated: {0}")]
    PropertyViolation(String),

    #[error("linear dependence detected: {0}")]
    LinearDependence(String),
}

impl Error {
    pub(crate) fn malformed(kind: &'static str, reason: impl Into<String>) -> Self {
        Error::Malformed {
            kind,
            reason: reason.into(),
        }
    }
}
