use thiserror::Error;

/// How a failure should be reported by a front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Domain,
    Resource,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inadmissible algebra {name}: {reason}")]
    InadmissibleType { name: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} for {ty} needs {expected} coordinates, got {found}")]
    RankMismatch {
        what: &'static str,
        ty: String,
        expected: usize,
        found: usize,
    },

    #[error("highest weight {0} is not dominant")]
    NotDominant(String),

    #[error("invalid grading element: {0}")]
    InvalidGrading(String),

    #[error("invalid Hodge tuple: {0}")]
    InvalidTuple(String),

    #[error("internal consistency violation: {0}")]
    Consistency(String),

    #[error("dimension {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: u128, cap: u128 },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("unbounded search: {0}")]
    Unbounded(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_)
            | Error::Unbounded(_)
            | Error::InadmissibleType { .. }
            | Error::RankMismatch { .. } => ErrorKind::Usage,
            Error::DimensionCap { .. } | Error::ResourceLimit(_) => ErrorKind::Resource,
            _ => ErrorKind::Domain,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
