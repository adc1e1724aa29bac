use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A fixed-width coordinate left its representable range.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("operands belong to different group instances")]
    InstanceMismatch,

    #[error("{element} is not in the cone G+({anchor})")]
    OutOfDomain { element: String, anchor: String },

    #[error("{0} is not an element of B+(G)")]
    NotInPositiveExtension(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("malformed equation: {0}")]
    MalformedEquation(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A construction failed its own verification. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
