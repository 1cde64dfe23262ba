use serde_json::json;

use plantlab_core::balanced::find_balanced_motif_detailed;

use super::to_json_line;
use crate::args::{CommonArgs, Settings};
use crate::error::Result;

pub fn run(args: &CommonArgs) -> Result<String> {
    let s = Settings::new(args)?;
    let (alpha, beta, gamma, r) = (s.alpha()?, s.beta()?, s.gamma()?, s.r()?);
    let found = find_balanced_motif_detailed(alpha, beta, gamma, r)?;
    Ok(to_json_line(&json!({
        "alpha": alpha,
        "beta": beta,
        "gamma": gamma,
        "r": r,
        "interval": [found.lower.to_string(), found.upper.to_string()],
        "target": found.target.to_string(),
        "motif": found.motif.to_json(),
    })))
}
