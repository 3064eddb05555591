use thiserror::Error;

pub type LabResult<T> = Result<T, LabError>;

#[derive(Debug, Error)]
pub enum LabError {
    /// Bad names, bad expressions and other caller mistakes (exit code 2).
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(ringlab_core::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

// the core error type is `no_std` and implements `Display` only
impl From<ringlab_core::Error> for LabError {
    fn from(e: ringlab_core::Error) -> Self {
        LabError::Core(e)
    }
}

impl LabError {
    pub fn usage(msg: impl Into<String>) -> Self {
        LabError::Usage(msg.into())
    }

    pub fn is_usage(&self) -> bool {
        matches!(self, LabError::Usage(_))
    }
}
