//! Squared norm of the degree-`D` low-degree likelihood ratio: closed form
//! over subgraph classes, brute force over edge subsets, and the variant
//! conditioned on the planted part containing no overly dense subgraph.

mod brute;
mod conditional;
mod conditioning;
mod exact;
pub mod highprec;

use serde::Serialize;

pub use brute::{ldlr_norm_bruteforce, ldlr_norm_bruteforce_exact, BRUTE_FORCE_BUDGET};
pub use conditional::{
    conditional_exact, conditional_ldlr_exact_tiny, ConditionalExact, ConditionalSummary,
    TermBoundCheck, CONDITIONAL_BUDGET_LOG2,
};
pub use conditioning::{
    build_conditioning_spec, estimate_event_probability, event_holds, event_holds_in,
    ConditioningSpec, EventEstimate, DEFAULT_DELTA, EVENT_EDGE_BUDGET, EVENT_NODE_BUDGET,
};
pub use exact::{ldlr_norm_exact, ln_phi_expectation, phi_expectation_exact, phi_expectation_planted};

use highprec::format_pow10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactFormula,
    BruteForce,
    ConditionalExact,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ExactFormula => "exact-formula",
            Method::BruteForce => "brute-force",
            Method::ConditionalExact => "conditional-exact",
        }
    }
}

/// Contribution of the class of edge subsets with `ell` vertices and `m`
/// edges.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassTerm {
    pub ell: u32,
    pub m: u32,
    /// Exact number of subsets in the class, in decimal.
    pub class_count: String,
    pub log10_class_count: f64,
    pub term: f64,
    pub log10_term: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LdlrResult {
    pub method: Method,
    pub degree: u32,
    /// The norm as a double; `inf` when it overflows (see `value_text`).
    pub value: f64,
    pub value_minus_one: f64,
    pub log10_value_minus_one: f64,
    /// Scientific-notation rendering of the norm valid at any magnitude.
    pub value_text: String,
    pub terms: Vec<ClassTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditional: Option<ConditionalSummary>,
}

/// Column header of [`LdlrResult::to_csv`].
pub const LDLR_CSV_HEADER: &str = "ell,m,log10_class_count,log10_term";

impl LdlrResult {
    pub(crate) fn from_log10(method: Method, degree: u32, log10_vm1: f64, terms: Vec<ClassTerm>) -> Self {
        let vm1 = 10f64.powf(log10_vm1);
        let value_text = if log10_vm1 > 15.0 {
            format_pow10(log10_vm1)
        } else {
            format!("{:.15e}", 1.0 + vm1)
        };
        LdlrResult {
            method,
            degree,
            value: 1.0 + vm1,
            value_minus_one: vm1,
            log10_value_minus_one: log10_vm1,
            value_text,
            terms,
            conditional: None,
        }
    }

    /// Per-class table as CSV, one row per nonempty class.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(LDLR_CSV_HEADER);
        out.push('\n');
        for t in &self.terms {
            out.push_str(&format!("{},{},{},{}\n", t.ell, t.m, t.log10_class_count, t.log10_term));
        }
        out
    }
}
