//! Library backing the `revineq` command-line harness. The binary in
//! `main.rs` is a thin clap dispatcher over [`commands`]; everything
//! testable lives here.

pub mod commands;
pub mod doc;
pub mod record;

use std::fmt;
use std::fs;
use std::path::Path;

/// CLI-level error, carrying the process exit status.
///
/// * `Input` (exit 2): malformed flags, unparseable files, bad parameter
///   values.
/// * `Structural` (exit 3): mathematically incompatible requests — field or
///   dimension mismatches, infeasible constraints, exhausted samplers.
///
/// Exit 1 is reserved for verification runs that found violated bounds; it
/// is a successful run with a negative answer, not an error.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Structural(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Structural(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Structural(msg) => write!(f, "structural error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<revineq::Error> for CliError {
    fn from(e: revineq::Error) -> Self {
        use revineq::Error::*;
        match e {
            InvalidParameter(_) | LengthMismatch(_) | EmptyVector | EmptyFamily | NonFinite => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Structural(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("JSON: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(format!("I/O: {e}"))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Write `contents` to `path` atomically: write a sibling temp file, then
/// rename over the destination, so readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
    let tmp = match dir {
        Some(d) => d.join(format!(
            ".{}.tmp",
            path.file_name()
                .map(|f| f.to_string_lossy().into_owned())
                .unwrap_or_else(|| "out".into())
        )),
        None => Path::new(&format!(
            ".{}.tmp",
            path.to_string_lossy()
        ))
        .to_path_buf(),
    };
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}
