//! Library side of the `parbun` command-line tool: input parsing, reports
//! and parameter scans. `main.rs` only handles arguments and exit codes.

pub mod input;
pub mod report;
pub mod scan;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unparseable or invalid input; exit code 1.
    #[error("bad input: {0}")]
    BadInput(String),
    /// A computed result failed a consistency check; exit code 2.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BadInput(_) => 1,
            CliError::Invariant(_) => 2,
        }
    }
}

impl From<parbun::Error> for CliError {
    fn from(e: parbun::Error) -> Self {
        CliError::BadInput(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::BadInput(format!("invalid JSON: {e}"))
    }
}
