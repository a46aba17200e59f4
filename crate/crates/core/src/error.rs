use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("operation not supported over {field}: {op}")]
    UnsupportedField { field: String, op: &'static str },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("cannot normalize over this field: {0}")]
    CannotNormalize(String),

    #[error("budget exceeded: {what} requires {required}, budget is {budget}")]
    Budget {
        what: String,
        required: String,
        budget: String,
    },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn budget(what: impl Into<String>, required: impl ToString, budget: impl ToString) -> Self {
        Error::Budget {
            what: what.into(),
            required: required.to_string(),
            budget: budget.to_string(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}
