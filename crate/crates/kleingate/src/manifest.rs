//! Run manifests: every output file is accompanied by a JSON sidecar carrying
//! the tool version, the fully resolved configuration, the constants in force
//! and the RNG seed, so a result can be regenerated byte-for-byte. Timestamps
//! live only in the sidecar; data files stay deterministic.

use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::Result;
use crate::kinematics::PhysicalConstants;

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// Fully resolved configuration after merging config file and flags.
    pub config: serde_json::Value,
    pub constants: serde_json::Value,
    pub seed: Option<u64>,
    pub timestamp_utc: String,
}

impl RunManifest {
    pub fn new(command: &str, config: serde_json::Value, consts: &PhysicalConstants, seed: Option<u64>) -> Self {
        Self {
            tool: "kleingate",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            config,
            constants: serde_json::json!({
                "hbar_vf_ev_angstrom": consts.hbar_vf_ev_angstrom,
                "coulomb_ev_nm": crate::coupling::COULOMB_EV_NM,
                "pi_orbital_extent_nm": crate::coupling::PI_ORBITAL_EXTENT_NM,
                "inelastic_length_nm": crate::kinematics::INELASTIC_LENGTH_NM,
            }),
            seed,
            timestamp_utc: chrono::Utc::now().to_rfc3339(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }

    /// Writes `<output>.manifest.json` next to an output file.
    pub fn write_sidecar(&self, output: &Path) -> Result<PathBuf> {
        let mut name = output.file_name().unwrap_or_default().to_os_string();
        name.push(".manifest.json");
        let path = output.with_file_name(name);
        std::fs::write(&path, self.to_json())?;
        Ok(path)
    }
}
