use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Every error is an input error and maps to exit code 2. Mathematical
/// mismatches are not errors; they are carried in the report.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{context}: {source}")]
    Core {
        context: String,
        source: foxhom_core::Error,
    },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError::Input(message.into())
    }

    pub fn exit_code(&self) -> i32 {
        2
    }
}

impl From<foxhom_core::Error> for CliError {
    fn from(source: foxhom_core::Error) -> Self {
        CliError::Core {
            context: "error".into(),
            source,
        }
    }
}

pub(crate) trait Context<T> {
    fn context(self, context: impl FnOnce() -> String) -> Result<T>;
}

impl<T> Context<T> for Result<T, foxhom_core::Error> {
    fn context(self, context: impl FnOnce() -> String) -> Result<T> {
        self.map_err(|source| CliError::Core {
            context: context(),
            source,
        })
    }
}
