use thiserror::Error;

/// Errors raised by graph construction, parsing, counting and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The request exceeds a configured size limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The requested object does not exist for these parameters.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// Malformed textual input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// An internal cross-check failed. Carries a reproduction bundle.
    #[error("consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
