use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("cannot write {}: {source}", path.display())]
    Unwritable {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("internal error: {0}")]
    Internal(#[from] fgltheta_core::Error),
    #[error("cannot format report: {0}")]
    Format(String),
}

impl CliError {
    /// 2 for anything the caller can fix, 3 for arithmetic bugs.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::InvalidConfig(_) | Self::Unwritable { .. } => 2,
            Self::Internal(_) | Self::Format(_) => 3,
        }
    }
}
