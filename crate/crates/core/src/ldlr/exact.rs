use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::highprec::{log_sum_exp, Hp};
use super::{ClassTerm, LdlrResult, Method};
use crate::error::Result;
use crate::hypergraph::{count_subgraph_class, EdgeSubgraph};
use crate::params::{ExactParams, ProblemParams};


/// `ln n`, `ln ρ`, and `ln((p-q)²/σ²)` at 128 bits. `None` in the last slot
/// when `p = q`.
pub(crate) struct LogParams {
    pub ln_rho: Hp,
    pub ln_signal: Option<Hp>,
}

impl LogParams {
    pub fn new(params: &ProblemParams) -> Self {
        let ln_n = Hp::from_u64(params.n).ln();
        // Densities from one exponent each; a density overridden on the
        // parameter struct is taken as given.
        let density = |exponent: f64, given: f64| {
            let v = (Hp::from_f64(exponent) * ln_n.clone()).exp();
            if (v.to_f64() - given).abs() <= 4.0 * f64::EPSILON * given {
                v
            } else {
                Hp::from_f64(given)
            }
        };
        let p = density(-params.alpha, params.p);
        let q = density(-params.beta, params.q);
        let ln_rho = (Hp::from_f64(params.gamma) - Hp::one()) * ln_n.clone();
        let gap = &p - &q;
        let ln_signal = if gap.is_zero() {
            None
        } else {
            // (p-q)² / (q(1-q)), sign irrelevant.
            let sq = &gap * &gap;
            Some(sq.ln() - q.ln() - (Hp::one() - q).ln())
        };
        LogParams { ln_rho, ln_signal }
    }

    /// `ln(ρ^{2ℓ} ((p-q)²/σ²)^m)`, or `None` when the signal vanishes.
    pub fn ln_class_weight(&self, ell: u32, m: u32) -> Option<Hp> {
        let rho_part = Hp::from_u64(2 * ell as u64) * self.ln_rho.clone();
        if m == 0 {
            return Some(rho_part);
        }
        Some(rho_part + Hp::from_u64(m as u64) * self.ln_signal.clone()?)
    }
}

/// `ln E_P[φ_S] = |V(S)| ln ρ + |S| ln((p-q)/σ)`.
pub fn ln_phi_expectation(s: &EdgeSubgraph, params: &ProblemParams) -> f64 {
    let lp = LogParams::new(params);
    match lp.ln_class_weight(s.ell() as u32, s.m() as u32) {
        Some(x) => 0.5 * x.to_f64(),
        None => f64::NEG_INFINITY,
    }
}

/// `E_P[φ_S] = ρ^{|V(S)|} ((p-q)/σ)^{|S|}`.
pub fn phi_expectation_planted(s: &EdgeSubgraph, params: &ProblemParams) -> f64 {
    if s.m() == 0 {
        return 1.0;
    }
    let sign = if params.p >= params.q || s.m().is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * ln_phi_expectation(s, params).exp()
}

/// `σ^{|S|} E_P[φ_S] = ρ^{|V(S)|} (p-q)^{|S|}` in exact arithmetic.
pub fn phi_expectation_exact(s: &EdgeSubgraph, ex: &ExactParams) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..s.ell() {
        out *= &ex.rho;
    }
    let gap = &ex.p - &ex.q;
    for _ in 0..s.m() {
        out *= &gap;
    }
    out
}

pub(crate) fn class_term(ell: u32, m: u32, count: &BigUint, ln_weight: Option<&Hp>) -> (ClassTerm, Option<Hp>) {
    let ln_count = Hp::from_biguint(count).ln();
    let ln_term = ln_weight.map(|w| &ln_count + w);
    let log10_term = ln_term.as_ref().map_or(f64::NEG_INFINITY, Hp::ln_to_log10);
    (
        ClassTerm {
            ell,
            m,
            class_count: count.to_string(),
            log10_class_count: ln_count.ln_to_log10(),
            term: 10f64.powf(log10_term),
            log10_term,
        },
        ln_term,
    )
}

/// `1 + Σ_{ℓ,m} |S_{ℓ,m}| ρ^{2ℓ} ((p-q)²/σ²)^m` over `r <= ℓ <= rD`,
/// `ceil(ℓ/r) <= m <= D`, with exact class counts.
pub fn ldlr_norm_exact(params: &ProblemParams, degree: u32) -> Result<LdlrResult> {
    let r = params.r;
    let lp = LogParams::new(params);
    let mut terms = Vec::new();
    let mut logs = Vec::new();
    for ell in r..=r * degree {
        for m in ell.div_ceil(r)..=degree {
            let count = count_subgraph_class(params.n, ell, m, r);
            if count.is_zero() {
                continue;
            }
            let w = lp.ln_class_weight(ell, m);
            let (term, ln_term) = class_term(ell, m, &count, w.as_ref());
            terms.push(term);
            logs.extend(ln_term);
        }
    }
    let log10 = log_sum_exp(&logs).map_or(f64::NEG_INFINITY, |x| x.ln_to_log10());
    Ok(LdlrResult::from_log10(Method::ExactFormula, degree, log10, terms))
}
