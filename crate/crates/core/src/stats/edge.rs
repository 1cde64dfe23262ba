use serde::Serialize;

use crate::error::{invalid, Result};
use crate::hypergraph::AdjacencyTensor;
use crate::params::ProblemParams;

/// Standardized edge value `(Y_e - q) / σ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StandardizedEdge {
    pub value: f64,
}

impl StandardizedEdge {
    pub fn new(present: bool, params: &ProblemParams) -> Self {
        let y = if present { 1.0 } else { 0.0 };
        StandardizedEdge {
            value: (y - params.q) / params.sigma,
        }
    }
}

pub(crate) fn check_shape(y: &AdjacencyTensor, params: &ProblemParams) -> Result<()> {
    if y.n() as u64 != params.n || y.r() != params.r {
        return Err(invalid!(
            "tensor shape (n = {}, r = {}) does not match parameters (n = {}, r = {})",
            y.n(),
            y.r(),
            params.n,
            params.r
        ));
    }
    Ok(())
}

/// `T̃ = Σ_e (Y_e - q)/σ`, computed as `(k - Mq)/σ` from the present count `k`.
pub fn signed_edge_count(y: &AdjacencyTensor, params: &ProblemParams) -> Result<f64> {
    check_shape(y, params)?;
    Ok(signed_from_count(y.count_present(), params))
}

pub(crate) fn signed_from_count(k: u64, params: &ProblemParams) -> f64 {
    (k as f64 - params.m_total * params.q) / params.sigma
}

/// Moments of `T̃`. `var_p_bound` is an upper bound, not an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EdgeMoments {
    pub eq: f64,
    pub var_q: f64,
    pub ep: f64,
    pub var_p_bound: f64,
    pub var_p_is_bound: bool,
}

pub fn exact_moments_edge_stat(params: &ProblemParams) -> EdgeMoments {
    let ProblemParams { n, r, p, q, rho, sigma, m_total: m, .. } = *params;
    let (n, rf) = (n as f64, r as f64);
    let s2 = sigma * sigma;
    let rho_r = rho.powi(r as i32);
    EdgeMoments {
        eq: 0.0,
        var_q: m,
        ep: m * rho_r * (p - q) / sigma,
        var_p_bound: m
            + 2.0 * m * rho_r * p / s2
            + 2.0 * m * rf * n.powf(rf - 1.0) * rho.powi(2 * r as i32 - 1) * p * p / s2,
        var_p_is_bound: true,
    }
}
