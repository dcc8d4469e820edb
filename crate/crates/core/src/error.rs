use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no AndroidManifest.xml found under {}", .0.display())]
    NoManifest(PathBuf),

    #[error("{} is not a directory", .0.display())]
    NotADirectory(PathBuf),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse failure in {file} at line {line}, column {column}: {message}")]
    ParseFailure { file: String, offset: usize, line: usize, column: usize, message: String },

    #[error("unknown operator `{id}`{}", .reason.as_deref().map(|r| format!(": {r}")).unwrap_or_default())]
    UnknownOperator { id: String, reason: Option<String> },

    #[error("cannot transform {stable_key} ({operator}): {message}")]
    TransformationFailure { operator: String, stable_key: String, message: String },

    #[error("patch conflict in {file} at {start}..{end}: expected bytes do not match")]
    PatchConflict { file: String, start: usize, end: usize },

    #[error("hook is not executable: {0}")]
    HookNotExecutable(String),

    #[error("unknown mutant id `{0}`")]
    UnknownMutantId(String),

    #[error("inconsistent manifest: {0}")]
    InconsistentManifest(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("malformed {what} document: {message}")]
    Format { what: &'static str, message: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
