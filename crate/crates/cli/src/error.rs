use std::fmt;

/// Failures of a command, split by exit code.
#[derive(Clone, Debug, PartialEq)]
pub enum CliError {
    /// Unreadable input or malformed JSON (exit code 3).
    Parse(String),
    /// Well-formed input rejected by a check (exit code 2).
    Validation { kind: String, message: String },
}

impl CliError {
    pub fn validation(kind: &str, message: impl Into<String>) -> Self {
        CliError::Validation {
            kind: kind.to_string(),
            message: message.into(),
        }
    }

    pub fn kind(&self) -> &str {
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::Validation { kind, .. } => kind,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Validation { message: m, .. } => m,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Validation { .. } => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind(), self.message())
    }
}

impl std::error::Error for CliError {}

impl From<calibra_core::Error> for CliError {
    fn from(e: calibra_core::Error) -> Self {
        CliError::validation(e.kind(), e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}
