use thiserror::Error;

/// Errors produced by the library.
///
/// Every variant maps onto one CLI exit-code class, see [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the domain of a special function or constructor.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed or inconsistent input (non-finite coefficients, bad grid, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A validity condition of a closed-form result does not hold.
    #[error("hypothesis violated: {condition}")]
    Hypothesis { condition: String },

    /// The requested value is an open problem; no formula is available.
    #[error("open problem: {0}")]
    OpenProblem(String),

    /// A root search found no sign change.
    #[error("no root: {0}")]
    NoRoot(String),

    /// The quantity is not defined for this input (e.g. polynomial kernels).
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

impl Error {
    pub(crate) fn hypothesis(condition: impl Into<String>) -> Self {
        Error::Hypothesis {
            condition: condition.into(),
        }
    }

    /// CLI exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 1,
            Error::Domain(_)
            | Error::Hypothesis { .. }
            | Error::OpenProblem(_)
            | Error::NotApplicable(_) => 2,
            Error::NoRoot(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
