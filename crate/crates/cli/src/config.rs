//! Optional JSON configuration file mirroring the command-line flags.
//! Every key is optional; a flag given on the command line always wins over
//! the file, and built-in defaults fill whatever remains.

use serde::Deserialize;
use std::fs;
use std::path::Path;

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub d0: Option<f64>,
    pub re: Option<f64>,
    pub a: Option<f64>,
    pub mass: Option<f64>,
    pub coupling: Option<String>,
    pub l: Option<u32>,
    pub n: Option<u32>,
    pub branch: Option<String>,
    pub nmax: Option<u32>,
    pub lmax: Option<u32>,
    pub rmin: Option<f64>,
    pub rmax: Option<f64>,
    pub points: Option<usize>,
    pub d0_from: Option<f64>,
    pub d0_to: Option<f64>,
    pub d0_step: Option<f64>,
    pub bound: Option<f64>,
    pub format: Option<String>,
    pub out: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
        serde_json::from_str(&text)
            .map_err(|e| format!("invalid config file {}: {e}", path.display()))
    }
}
