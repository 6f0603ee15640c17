use std::path::{Path, PathBuf};

use lejakit::SearchConfig;
use serde::{Deserialize, Serialize};

/// Provenance record written next to every output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: serde_json::Value,
    pub search: SearchConfig,
    pub version: String,
    pub seed: u64,
    pub threads: usize,
    pub wall_time_s: f64,
}

impl RunManifest {
    pub fn new(command: &str, parameters: serde_json::Value, search: SearchConfig, seed: u64) -> Self {
        RunManifest {
            command: command.to_string(),
            parameters,
            search,
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            threads: rayon::current_num_threads(),
            wall_time_s: 0.0,
        }
    }

    /// `out.csv` -> `out.csv.manifest.json`
    pub fn path_for(out: &Path) -> PathBuf {
        let mut s = out.as_os_str().to_owned();
        s.push(".manifest.json");
        PathBuf::from(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
