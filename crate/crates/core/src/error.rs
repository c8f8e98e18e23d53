use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range parameters.
    #[error("invalid input: {0}")]
    Input(String),
    /// A configured size bound or retry budget was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
    /// A computed identity or structural property did not hold.
    #[error("verification failed: {0}")]
    Verification(String),
    /// A self-consistency check tripped; indicates a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Resource(_) | Error::Json(_) => 2,
            Error::Verification(_) | Error::Internal(_) => 1,
        }
    }
}
