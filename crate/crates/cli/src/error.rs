//! Error type carrying the process exit code.

use std::fmt;
use std::path::PathBuf;

use antcycle::tsplib::ParseError;

/// Exit codes: 2 for bad flag values, 3 for instance parse failures, 4 for
/// I/O failures. Unparseable flags also exit 2 via the clap parser itself.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse { path: PathBuf, source: ParseError },
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse { .. } => 3,
            CliError::Io { .. } => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Parse { path, source } => {
                write!(f, "cannot parse {}: {source}", path.display())
            }
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl std::error::Error for CliError {}
