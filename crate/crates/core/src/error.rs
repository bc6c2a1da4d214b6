use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("ordering {scheme} is not valid for a {vertices}-vertex family")]
    UnsupportedOrdering { scheme: String, vertices: usize },

    #[error("matrix is not {0}")]
    Structure(String),

    #[error("ambiguous cotan weight: {0}")]
    AmbiguousWeight(String),

    #[error("eigensolver failed: {0}")]
    Eigen(String),

    #[error("invalid OEIS identifier {0:?}")]
    InvalidAnum(String),

    #[error("{anum} is neither cached nor bundled and network access is disabled")]
    NotCached { anum: String },

    #[error("network error fetching {anum}: {reason}")]
    Network { anum: String, reason: String },

    #[error("malformed b-file line {line}: {content:?}")]
    MalformedBFile { line: usize, content: String },

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
