//! Library surface of the `krtorus` command-line tool: request/response
//! documents, command dispatch, and markdown rendering.

pub mod markdown;
pub mod model;
pub mod run;

use std::fmt;

use model::ErrorBody;

#[derive(Debug)]
pub enum CliError {
    Schema {
        message: String,
        pointer: Option<String>,
    },
    Math {
        message: String,
    },
    Io {
        message: String,
    },
}

impl CliError {
    pub fn schema(message: impl Into<String>) -> Self {
        CliError::Schema {
            message: message.into(),
            pointer: None,
        }
    }

    pub fn schema_at(message: impl Into<String>, pointer: &str) -> Self {
        CliError::Schema {
            message: message.into(),
            pointer: Some(pointer.to_string()),
        }
    }

    pub fn math_from(err: impl fmt::Display) -> Self {
        CliError::Math {
            message: err.to_string(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError::Io {
            message: message.into(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Schema { .. } => "schema",
            CliError::Math { .. } => "math",
            CliError::Io { .. } => "io",
        }
    }

    /// 2 for malformed requests, 3 for mathematically invalid ones.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Schema { .. } | CliError::Io { .. } => 2,
            CliError::Math { .. } => 3,
        }
    }

    pub fn body(&self) -> ErrorBody {
        let (message, pointer) = match self {
            CliError::Schema { message, pointer } => (message.clone(), pointer.clone()),
            CliError::Math { message } | CliError::Io { message } => (message.clone(), None),
        };
        ErrorBody {
            kind: self.kind().to_string(),
            message,
            pointer,
        }
    }
}
