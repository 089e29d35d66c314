use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `position` is the 1-based index of the offending token.
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    /// A supplied inverse does not invert the supplied map.
    #[error("certification failed: {0}")]
    Certification(String),

    /// A search or consistency check that should never fail did fail.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }

    pub(crate) fn check_rank(left: usize, right: usize) -> Result<()> {
        if left == right {
            Ok(())
        } else {
            Err(Error::RankMismatch { left, right })
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
