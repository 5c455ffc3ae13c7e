//! Flat JSON configuration files. Every key mirrors a CLI flag; explicit
//! flags always win over file values.

use std::path::Path;

use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub input: Option<String>,
    pub resource: Option<String>,
    pub r: Option<f64>,
    pub phi: Option<f64>,
    pub delta: Option<f64>,
    pub theta: Option<f64>,
    pub beta: Option<f64>,
    pub s: Option<f64>,
    pub varphi: Option<f64>,
    pub grid: Option<String>,
    pub tol: Option<f64>,
    pub cutoff: Option<usize>,
    pub gain: Option<f64>,
    pub method: Option<String>,
    pub format: Option<String>,
    pub out: Option<String>,
}

pub fn load(path: Option<&Path>) -> Result<FileConfig, CliError> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::Config(format!("cannot read config {}: {err}", path.display())))?;
    serde_json::from_str(&text).map_err(|err| {
        CliError::Config(format!(
            "config {} is not a flat JSON object of flag values: {err}",
            path.display()
        ))
    })
}
