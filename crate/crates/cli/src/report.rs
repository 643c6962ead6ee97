use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

/// Machine-readable outcome of one command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    pub seed: Option<u64>,
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn ok(command: &str, payload: Value, seed: Option<u64>) -> Self {
        Report {
            command: command.to_string(),
            status: Status::Ok,
            payload,
            seed,
            error: None,
        }
    }

    pub fn failed(command: &str, err: &CliError, payload: Value, seed: Option<u64>) -> Self {
        Report {
            command: command.to_string(),
            status: Status::Error,
            payload,
            seed,
            error: Some(ErrorInfo {
                kind: err.kind().to_string(),
                message: err.message().to_string(),
            }),
        }
    }
}
