use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A user-supplied setting is missing, malformed or out of range.
    #[error("invalid `{field}`: {message}")]
    Field { field: &'static str, message: String },
    #[error("cannot read config file {path}: {source}")]
    ConfigRead { path: PathBuf, source: std::io::Error },
    #[error("cannot parse config file {path}: {message}")]
    ConfigParse { path: PathBuf, message: String },
    #[error("{context}: {source}")]
    Compute { context: &'static str, source: billiard_core::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("cannot encode output: {0}")]
    Encode(String),
}

impl CliError {
    pub fn field(field: &'static str, message: impl Into<String>) -> Self {
        CliError::Field { field, message: message.into() }
    }

    /// Wraps a core error raised while computing `context`.
    pub fn compute(context: &'static str) -> impl FnOnce(billiard_core::Error) -> Self {
        move |source| CliError::Compute { context, source }
    }
}
