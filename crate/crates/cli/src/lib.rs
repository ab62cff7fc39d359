//! Std companion to the core library: text formats, JSON reports, and the
//! verification runner behind the `crclab` binary.

pub mod format;
pub mod report;
pub mod runner;

use std::path::PathBuf;

/// Errors surfaced by the command-line layer. Everything ultimately renders
/// as a one-line message; the exit code distinguishes failed checks (1) from
/// usage, guard, and IO problems (2).
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] crclab_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Format(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// The two code families the binary knows how to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// The pair family: check columns are all weight-2 vectors of length m.
    Pair,
    /// The union of the pair code with its covering coset (even m ≥ 6).
    Union,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family, CliError> {
        match s {
            "Cm" => Ok(Family::Pair),
            "Cm-union" => Ok(Family::Union),
            other => Err(CliError::Usage(format!(
                "unknown family {other:?}; expected \"Cm\" or \"Cm-union\""
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Pair => "Cm",
            Family::Union => "Cm-union",
        }
    }

    pub fn build(
        self,
        m: usize,
        table_bits: usize,
    ) -> Result<crclab_core::code::LinearCode, crclab_core::Error> {
        match self {
            Family::Pair => crclab_core::families::build_cm(m),
            Family::Union => crclab_core::families::build_cm_union_with_limit(m, table_bits),
        }
    }
}
