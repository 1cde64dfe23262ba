use serde::Serialize;

use crate::error::{invalid, Result};

/// Half-width of the band around the threshold reported as a boundary.
pub const BOUNDARY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Easy,
    Hard,
    Boundary,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Easy => "easy",
            Regime::Hard => "hard",
            Regime::Boundary => "boundary",
        }
    }
}

/// The critical `α` for given `(β, γ, r)`: `β/2 + r(γ - 1/2)` when
/// `γ >= 1/2` and `βγ` otherwise.
pub fn regime_threshold(beta: f64, gamma: f64, r: u32) -> f64 {
    if gamma >= 0.5 {
        beta / 2.0 + r as f64 * (gamma - 0.5)
    } else {
        beta * gamma
    }
}

/// Classifies `(α, β, γ, r)` as below (easy), above (hard), or within
/// [`BOUNDARY_TOLERANCE`] of the computational threshold.
pub fn classify_regime(alpha: f64, beta: f64, gamma: f64, r: u32) -> Result<Regime> {
    if r < 2 {
        return Err(invalid!("constraint r >= 2 violated (r = {r})"));
    }
    if !(alpha > 0.0 && alpha < beta && beta < (r - 1) as f64) {
        return Err(invalid!(
            "constraint 0 < α < β < r - 1 violated (α = {alpha}, β = {beta}, r = {r})"
        ));
    }
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(invalid!("constraint 0 < γ < 1 violated (γ = {gamma})"));
    }
    let diff = alpha - regime_threshold(beta, gamma, r);
    Ok(if diff.abs() <= BOUNDARY_TOLERANCE {
        Regime::Boundary
    } else if diff < 0.0 {
        Regime::Easy
    } else {
        Regime::Hard
    })
}
