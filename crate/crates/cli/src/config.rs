use std::path::PathBuf;

use serde::Deserialize;

/// Defaults used when a flag is not given; overridable from a JSON config
/// file (`--config`), with command-line flags taking precedence over both.
#[derive(Clone, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CliConfig {
    pub truncation_order: u32,
    pub n_max: u32,
    pub r_max: u32,
    pub m_values: Vec<u32>,
    pub k_max: u32,
    pub format: String,
    pub out: Option<PathBuf>,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            truncation_order: 16,
            n_max: 10,
            r_max: 3,
            m_values: vec![1, 3, 5],
            k_max: 10,
            format: "text".into(),
            out: None,
        }
    }
}

impl CliConfig {
    pub fn load(path: &std::path::Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text)
            .map_err(|e| format!("cannot parse config {}: {e}", path.display()))
    }
}
