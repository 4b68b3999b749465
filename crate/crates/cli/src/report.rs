//! Report envelope, input hashing and file I/O.

use std::fs;
use std::path::{Path, PathBuf};

use hopfscope::HopfError;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: invalid JSON: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

impl CliError {
    /// Errors that mean "the mathematics does not check out" rather than "the
    /// input could not be used"; these exit with status 1 and still produce a
    /// report.
    pub fn is_check_failure(&self) -> bool {
        matches!(
            self,
            CliError::Hopf(
                HopfError::DivisibilityViolation { .. }
                    | HopfError::ChevalleyViolation(_)
                    | HopfError::DependentEntries
                    | HopfError::NoSolution(_)
                    | HopfError::YDViolation(_)
                    | HopfError::SplittingViolation(_)
                    | HopfError::NotInR
                    | HopfError::NonTerminating(..)
            )
        )
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Reads input files, hashing their bytes in the order they are read.
#[derive(Default)]
pub struct Inputs {
    hasher: Sha256,
    files: usize,
}

impl Inputs {
    pub fn json(&mut self, path: &Path) -> CliResult<Value> {
        let bytes = fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        self.hasher.update(&bytes);
        self.files += 1;
        serde_json::from_slice(&bytes).map_err(|source| CliError::Json { path: path.to_path_buf(), source })
    }

    /// Hex SHA-256 of the inputs; commands without input files hash their
    /// canonical parameters instead.
    pub fn digest(self, params: &Value) -> String {
        let mut hasher = self.hasher;
        if self.files == 0 {
            hasher.update(params.to_string().as_bytes());
        }
        hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// What a command produced: its result payload and whether every check passed.
pub struct Outcome {
    pub result: Value,
    pub pass: bool,
}

impl Outcome {
    pub fn new(result: Value, pass: bool) -> Self {
        Outcome { result, pass }
    }
}

pub fn envelope(command: &str, input_sha256: String, result: Value) -> Value {
    json!({
        "tool": "hopfscope",
        "version": env!("CARGO_PKG_VERSION"),
        "input_sha256": input_sha256,
        "command": command,
        "result": result,
    })
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn write_json(path: &Path, v: &Value) -> CliResult<()> {
    write_text(path, &pretty(v))
}
