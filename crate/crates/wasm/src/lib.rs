//! Browser bindings. Every export returns a JSON string; the plain
//! `*_json` functions are the same calls without the JS error wrapper.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use plantlab_core::balanced::find_balanced_motif_detailed;
use plantlab_core::ldlr::ldlr_norm_exact;
use plantlab_core::stats::{classify_regime, regime_threshold};
use plantlab_core::ProblemParams;

fn log10_ldlr(n: u64, r: u32, alpha: f64, beta: f64, gamma: f64, degree: u32) -> Result<f64, String> {
    let params = ProblemParams::new(n, r, alpha, beta, gamma).map_err(|e| e.to_string())?;
    Ok(ldlr_norm_exact(&params, degree).map_err(|e| e.to_string())?.log10_value_minus_one)
}

/// `log10(‖L≤D‖² − 1)` at `points` values of n spaced evenly in log scale
/// between `10^lo` and `10^hi`.
#[allow(clippy::too_many_arguments)]
pub fn ldlr_curve_json(
    r: u32,
    alpha: f64,
    beta: f64,
    gamma: f64,
    degree: u32,
    lo: f64,
    hi: f64,
    points: u32,
) -> Result<String, String> {
    if !(lo >= 0.5 && hi <= 18.0 && lo < hi && (2..=200).contains(&points)) {
        return Err("need 0.5 <= lo < hi <= 18 and 2 <= points <= 200".into());
    }
    let regime = classify_regime(alpha, beta, gamma, r).map_err(|e| e.to_string())?;
    let mut curve = Vec::with_capacity(points as usize);
    for i in 0..points {
        let e = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        let n = 10f64.powf(e).round() as u64;
        curve.push(json!({ "n": n, "log10_ldlr_minus_1": log10_ldlr(n, r, alpha, beta, gamma, degree)? }));
    }
    Ok(json!({
        "regime": regime.as_str(),
        "threshold": regime_threshold(beta, gamma, r),
        "curve": curve,
    })
    .to_string())
}

/// Regime and `log10(‖L≤D‖² − 1)` over a `steps × steps` grid of
/// `(α, γ)` cell centres, with α in `(0, min(β, 1))`.
pub fn phase_grid_json(r: u32, beta: f64, n: u64, degree: u32, steps: u32) -> Result<String, String> {
    if !(2..=60).contains(&steps) {
        return Err("steps must lie in 2..=60".into());
    }
    if !(beta > 0.0 && beta < (r - 1) as f64) {
        return Err(format!("need 0 < beta < r - 1 (beta = {beta}, r = {r})"));
    }
    let amax = beta.min(1.0);
    let mut cells = Vec::new();
    for j in 0..steps {
        let gamma = (j as f64 + 0.5) / steps as f64;
        for i in 0..steps {
            let alpha = amax * (i as f64 + 0.5) / steps as f64;
            let cell = match classify_regime(alpha, beta, gamma, r) {
                Ok(regime) => json!({
                    "alpha": alpha,
                    "gamma": gamma,
                    "regime": regime.as_str(),
                    "log10_ldlr_minus_1": log10_ldlr(n, r, alpha, beta, gamma, degree).ok(),
                }),
                Err(_) => json!({ "alpha": alpha, "gamma": gamma, "regime": "invalid" }),
            };
            cells.push(cell);
        }
    }
    let threshold: Vec<Value> = (0..=100)
        .map(|k| {
            let gamma = k as f64 / 100.0;
            json!([gamma, regime_threshold(beta, gamma, r)])
        })
        .collect();
    Ok(json!({ "alpha_max": amax, "steps": steps, "cells": cells, "threshold": threshold }).to_string())
}

/// Canonical balanced motif for `(α, β, γ, r)` with its search interval.
pub fn balanced_motif_json(alpha: f64, beta: f64, gamma: f64, r: u32) -> Result<String, String> {
    let s = find_balanced_motif_detailed(alpha, beta, gamma, r).map_err(|e| e.to_string())?;
    Ok(json!({
        "interval": [s.lower.to_string(), s.upper.to_string()],
        "target": s.target.to_string(),
        "motif": s.motif.to_json(),
    })
    .to_string())
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn ldlr_curve(
    r: u32,
    alpha: f64,
    beta: f64,
    gamma: f64,
    degree: u32,
    lo: f64,
    hi: f64,
    points: u32,
) -> Result<String, JsError> {
    ldlr_curve_json(r, alpha, beta, gamma, degree, lo, hi, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn phase_grid(r: u32, beta: f64, n: u64, degree: u32, steps: u32) -> Result<String, JsError> {
    phase_grid_json(r, beta, n, degree, steps).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn balanced_motif(alpha: f64, beta: f64, gamma: f64, r: u32) -> Result<String, JsError> {
    balanced_motif_json(alpha, beta, gamma, r).map_err(|e| JsError::new(&e))
}
