use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has {n} vertices, exceeding the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid broadcast: {0}")]
    InvalidBroadcast(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("certificate {name} failed validation: {reason}")]
    CertificateRejected { name: String, reason: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("unknown parameter kind `{0}`")]
    UnknownKind(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
