use std::path::PathBuf;

use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_IO: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] naqc::Error),

    #[error("I/O failure on {}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("closed-form verification failed (hard checks exceeded tolerance)")]
    Verification,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(naqc::Error::UnknownPreset(_)) => EXIT_USAGE,
            CliError::Core(naqc::Error::Io(_)) | CliError::Io { .. } => EXIT_IO,
            CliError::Core(_) => EXIT_DOMAIN,
            CliError::Verification => EXIT_VERIFY,
        }
    }
}
