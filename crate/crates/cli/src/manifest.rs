//! Run manifests: enough context to reproduce a run bit-for-bit.

use std::path::Path;
use std::time::Instant;

use serde::Serialize;

use crate::{CliError, CliResult};

/// Written alongside results; rerunning with the recorded command and seed
/// reproduces all numeric outputs.
#[derive(Serialize)]
pub struct RunManifest {
    pub command: String,
    pub argv: Vec<String>,
    pub seed: Option<u64>,
    pub tool_version: String,
    pub wall_time_ms: u128,
    pub outputs: Vec<String>,
}

pub struct ManifestBuilder {
    command: String,
    argv: Vec<String>,
    seed: Option<u64>,
    outputs: Vec<String>,
    started: Instant,
}

impl ManifestBuilder {
    pub fn new(command: &str) -> Self {
        ManifestBuilder {
            command: command.to_owned(),
            argv: std::env::args().collect(),
            seed: None,
            outputs: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn seed(&mut self, seed: u64) {
        self.seed = Some(seed);
    }

    pub fn output(&mut self, path: &Path) {
        self.outputs.push(path.display().to_string());
    }

    pub fn write(self, path: &Path) -> CliResult<()> {
        let manifest = RunManifest {
            command: self.command,
            argv: self.argv,
            seed: self.seed,
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            wall_time_ms: self.started.elapsed().as_millis(),
            outputs: self.outputs,
        };
        let text = serde_json::to_string_pretty(&manifest)
            .expect("manifest serialization cannot fail");
        std::fs::write(path, text)
            .map_err(|e| CliError::Domain(format!("cannot write '{}': {e}", path.display())))
    }
}
