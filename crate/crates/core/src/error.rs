use thiserror::Error;

/// Errors raised by the engine. Validation-style failures carry the path of
/// the offending field or element so callers can point at it.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at `{path}`: {message}")]
    Parse { path: String, message: String },

    #[error("validation failed: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Validation(Vec<crate::data::Violation>),

    #[error("invalid argument `{name}`: {message}")]
    Argument { name: String, message: String },

    #[error("inconsistent inputs: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn argument(name: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Argument {
            name: name.into(),
            message: message.into(),
        }
    }

    /// Field path or element the error refers to, when one is known.
    pub fn path(&self) -> Option<String> {
        match self {
            Error::Parse { path, .. } => Some(path.clone()),
            Error::Argument { name, .. } => Some(name.clone()),
            Error::Validation(v) => v.first().map(|v| v.path()),
            Error::Consistency(_) => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
