use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] ecclab_core::Error),
    #[error("certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

impl LabError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        LabError::Io { path: path.into(), source }
    }

    pub(crate) fn format(line: usize, msg: impl Into<String>) -> Self {
        LabError::Format { line, msg: msg.into() }
    }

    /// Process exit status: 2 for bad input or flags, 3 for size and resource guards.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Core(ecclab_core::Error::SizeGuard { .. } | ecclab_core::Error::ResourceLimit { .. }) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;
