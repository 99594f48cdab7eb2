use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("singular angle {degrees}° for {method}: use dgt_auto or pick another method")]
    SingularAngle { method: &'static str, degrees: f64 },
    #[error("singular parameter: {0}")]
    SingularParameter(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("ill-conditioned operation: {0}")]
    Conditioning(String),
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("degenerate key: {0}")]
    DegenerateKey(String),
    #[error("weak key: {0}")]
    WeakKey(String),
    #[error("format error at byte {offset}: {msg}")]
    Format { offset: usize, msg: String },
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_)
            | Error::Range(_)
            | Error::Config(_)
            | Error::Shape(_)
            | Error::InsufficientData(_)
            | Error::WeakKey(_)
            | Error::DegenerateKey(_) => 2,
            Error::Format { .. } | Error::Io(_) => 3,
            Error::SingularAngle { .. } | Error::SingularParameter(_) => 4,
            _ => 5,
        }
    }

    pub(crate) fn format(offset: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            offset,
            msg: msg.into(),
        }
    }
}
