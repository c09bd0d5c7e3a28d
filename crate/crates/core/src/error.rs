//! Crate-wide error type.

use std::path::PathBuf;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Top-level JSON is unreadable. Reports the byte offset of the failure
    /// in addition to line/column.
    #[error("malformed JSON at byte {offset} (line {line}, column {column}): {message}")]
    Json {
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },

    /// A line of an embedding text file could not be parsed.
    #[error("{path}:{line}: {message}")]
    EmbeddingFormat {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    Dim {
        context: String,
        expected: usize,
        got: usize,
    },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{0}")]
    Data(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn dim(context: impl Into<String>, expected: usize, got: usize) -> Self {
        Error::Dim {
            context: context.into(),
            expected,
            got,
        }
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    /// Builds a [`Error::Json`] from a `serde_json` error, recovering the
    /// byte offset of the failure from its line/column report.
    pub fn from_json(err: &serde_json::Error, input: &str) -> Self {
        let line = err.line();
        let column = err.column();
        let offset = byte_offset_of(input, line, column);
        Error::Json {
            offset,
            line,
            column,
            message: err.to_string(),
        }
    }
}

/// Byte offset of 1-based (line, column) in `input`. `serde_json` counts
/// columns in bytes starting at 1.
fn byte_offset_of(input: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let mut seen = 1usize;
    let mut offset = 0usize;
    for (i, b) in input.bytes().enumerate() {
        if seen == line {
            offset = i;
            break;
        }
        if b == b'\n' {
            seen += 1;
            offset = i + 1;
        }
    }
    (offset + column.saturating_sub(1)).min(input.len())
}
