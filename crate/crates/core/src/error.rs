use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Both likelihoods are zero: the evidence is impossible under either hypothesis.
    #[error("likelihood ratio is indeterminate: evidence has probability 0 under both hypotheses")]
    IndeterminateLr,

    #[error("evidence has probability 0 under the model")]
    ImpossibleEvidence,

    #[error("cannot condition on an event of probability 0 ({0})")]
    ConditioningOnNull(String),

    #[error("hypotheses `{0}` and `{1}` overlap")]
    HypothesisOverlap(String, String),

    #[error("{path}: {message}")]
    Schema { path: String, message: String },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("enumeration of {count} items exceeds the cap of {cap}")]
    EnumerationTooLarge { count: BigUint, cap: BigUint },

    #[error("no draw satisfied the conditioning event after {samples} samples")]
    InconclusiveSampling { samples: u64 },
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }

    /// Prefix the field path of a schema error, or wrap any other error as a
    /// schema error at `path` when it came from validating user input.
    pub(crate) fn at(self, path: &str) -> Self {
        match self {
            Error::Schema { path: inner, message } if inner.is_empty() => Error::schema(path, message),
            Error::Schema { path: inner, message } => Error::schema(format!("{path}.{inner}"), message),
            Error::Validation(message) => Error::schema(path, message),
            other => other,
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Schema { .. } | Error::Validation(_) | Error::HypothesisOverlap(..) => 2,
            Error::IndeterminateLr | Error::ImpossibleEvidence | Error::ConditioningOnNull(_) => 3,
            Error::EnumerationTooLarge { .. } => 4,
            Error::InconclusiveSampling { .. } => 1,
        }
    }
}
