pub mod find_balanced;
pub mod ldlr;
pub mod phase;
pub mod sample;
pub mod test;

use std::path::Path;

use serde_json::Value;

use plantlab_core::balanced::BalancedMotif;

use crate::args::read_file;
use crate::error::{usage, Result};

/// Reads a motif from either the full `find-balanced` output or a bare
/// motif object.
pub fn load_motif(path: &Path) -> Result<BalancedMotif> {
    let value: Value = serde_json::from_str(&read_file(path)?)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let motif = value.get("motif").unwrap_or(&value);
    Ok(BalancedMotif::from_json(motif)?)
}

pub fn to_json_line(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}
