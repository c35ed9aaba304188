use thiserror::Error;

/// Errors produced by the algebra, the searches and the harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {what} is {actual}, limit {limit}")]
    Resource {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("exponent overflow")]
    Overflow,

    #[error("parse error at position {position}: {message} (near `{token}`)")]
    Parse {
        token: String,
        position: usize,
        message: String,
    },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("malformed filtration: {0}")]
    MalformedFiltration(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn check_ring(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::RingMismatch { expected, found })
        }
    }
}
