use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{label}: {source}")]
    Core {
        label: String,
        #[source]
        source: torusdisc::Error,
    },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn core(label: impl Into<String>, source: torusdisc::Error) -> Self {
        CliError::Core { label: label.into(), source }
    }

    /// Process exit code: 2 for configuration problems, 3 for resource caps.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core { source, .. } => match source {
                torusdisc::Error::ModulusTooLarge { .. } | torusdisc::Error::DegreeTooLarge { .. } => 3,
                _ => 2,
            },
            CliError::Config(_) | CliError::Io(_) => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
