//! File formats and parsing for the `dynmahler` command line tool:
//! polynomial JSON schemas, point syntax, factor-spec lists, PPM/PGM
//! output, and run manifests.

pub mod formats;
pub mod image;
pub mod manifest;
pub mod points;

pub use formats::{parse_factor_specs, parse_mpoly, parse_zpoly};
pub use manifest::RunManifest;
pub use points::{parse_complex, parse_rational};

/// Errors carry an exit-code hint: usage/parse problems exit 2, domain
/// failures exit 1.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input (bad JSON, bad point syntax, missing file): exit 2.
    Usage(String),
    /// Well-formed input that the computation rejects: exit 1.
    Domain(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<dynmahler_core::Error> for CliError {
    fn from(e: dynmahler_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
