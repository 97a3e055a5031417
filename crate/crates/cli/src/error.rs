use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed JSON or an entry that is not an exact scalar.
    #[error("{0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error(transparent)]
    Core(#[from] sll_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Param(_) => 2,
            CliError::Io { .. } => 2,
            CliError::Core(e) => match e {
                sll_core::Error::InvalidField(_) | sll_core::Error::Parse { .. } => 2,
                sll_core::Error::TruncatedLattice => 4,
                _ => 3,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
