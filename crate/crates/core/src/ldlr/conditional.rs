use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::brute::{check_budget, complete_edge_masks, for_each_subset};
use super::conditioning::{event_holds_in, ConditioningSpec};
use super::{ClassTerm, LdlrResult, Method};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::binomial_u64;
use crate::params::{ExactParams, ProblemParams};

/// Largest `log2(2^n · 2^M)` accepted by the conditional oracle.
pub const CONDITIONAL_BUDGET_LOG2: u32 = 16;

/// Lemma bound check for one edge subset `S`, with `σ^{|S|}` factored out
/// of both sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermBoundCheck {
    /// Ranks of the edges of `S`.
    pub edges: Vec<usize>,
    pub ell: u32,
    pub m: u32,
    pub bad: bool,
    /// `σ^m |E_P[φ_S 1_E]|`.
    pub value: f64,
    pub bound: f64,
    /// Exact comparison `value <= bound`.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionalSummary {
    pub prob_event: f64,
    /// `P(E)` as an exact fraction.
    pub prob_event_exact: String,
    /// `Σ E_P[φ_S 1_E]²` over good and over bad subsets (excluding `S = ∅`).
    pub good_sum: f64,
    pub bad_sum: f64,
    pub good_count: u64,
    pub bad_count: u64,
    pub all_bounds_hold: bool,
    pub checks: Vec<TermBoundCheck>,
}

/// Exact output of the conditional oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalExact {
    pub value: BigRational,
    pub prob_event: BigRational,
    /// `(edge ranks, ℓ, m, σ^m E_P[φ_S 1_E])` for every nonempty `S`.
    pub numerators: Vec<(Vec<usize>, u32, u32, BigRational)>,
}

fn pow(x: &BigRational, k: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..k {
        out *= x;
    }
    out
}

/// Exact `‖L'_{≤D}‖²` for the planted model conditioned on the event, by
/// enumerating every planted set `Z` and every configuration of the edges
/// inside `Z`. Edges outside `Z` are independent of the event and have
/// centered mean zero, so only `S` with `V(S) ⊆ Z` contribute.
pub fn conditional_exact(ex: &ExactParams, spec: &ConditioningSpec) -> Result<ConditionalExact> {
    if ex.is_degenerate() {
        return Err(invalid!("σ = 0"));
    }
    let masks = complete_edge_masks(ex.n, ex.r)?;
    let total_edges = masks.len() as u32;
    if ex.n + total_edges > CONDITIONAL_BUDGET_LOG2 {
        return Err(Error::TooLarge(format!(
            "conditional oracle needs 2^n · 2^M <= 2^{CONDITIONAL_BUDGET_LOG2} (n = {}, M = {total_edges})",
            ex.n
        )));
    }
    check_budget(masks.len() as u64, spec.degree)?;

    // Every nonempty S with |S| <= D, as an edge bitset.
    let mut subsets: Vec<(Vec<usize>, u64, u32, u32)> = Vec::new();
    for_each_subset(&masks, spec.degree, |chosen, union| {
        if !chosen.is_empty() {
            let bits = chosen.iter().fold(0u64, |b, &i| b | 1 << i);
            subsets.push((chosen.to_vec(), bits, union.count_ones(), chosen.len() as u32));
        }
    });

    let one = BigRational::one();
    let pos = &one - &ex.q;
    let neg = -ex.q.clone();
    let d = spec.degree as usize;
    let pos_pow: Vec<BigRational> = (0..=d as u32).map(|k| pow(&pos, k)).collect();
    let neg_pow: Vec<BigRational> = (0..=d as u32).map(|k| pow(&neg, k)).collect();

    let mut numer = vec![BigRational::zero(); subsets.len()];
    let mut prob_event = BigRational::zero();
    for z in 0u64..1 << ex.n {
        let size = z.count_ones();
        let pz = pow(&ex.rho, size) * pow(&(&one - &ex.rho), ex.n - size);
        let inside: Vec<usize> = (0..masks.len()).filter(|&i| masks[i] & z == masks[i]).collect();
        let inside_bits = inside.iter().fold(0u64, |b, &i| b | 1 << i);
        let relevant: Vec<usize> = (0..subsets.len())
            .filter(|&s| subsets[s].1 & !inside_bits == 0)
            .collect();
        let k = inside.len() as u32;
        for c in 0u64..1 << k {
            let present = c.count_ones();
            let prob = &pz * pow(&ex.p, present) * pow(&(&one - &ex.p), k - present);
            if prob.is_zero() {
                continue;
            }
            let mut config = 0u64;
            let mut planted = Vec::new();
            for (j, &i) in inside.iter().enumerate() {
                if c >> j & 1 == 1 {
                    config |= 1 << i;
                    let m = masks[i];
                    planted.push((0..64u32).filter(|v| m >> v & 1 == 1).collect::<Vec<_>>());
                }
            }
            if !event_holds_in(&planted, spec)? {
                continue;
            }
            prob_event += &prob;
            for &s in &relevant {
                let (_, bits, _, m) = &subsets[s];
                let a = (bits & config).count_ones() as usize;
                let f = &pos_pow[a] * &neg_pow[*m as usize - a];
                numer[s] += &prob * f;
            }
        }
    }
    if prob_event.is_zero() {
        return Err(Error::Infeasible("the conditioning event has probability zero".into()));
    }
    let sigma_sq = ex.sigma_sq();
    let pe_sq = &prob_event * &prob_event;
    let mut value = BigRational::one();
    for ((_, _, _, m), a) in subsets.iter().zip(&numer) {
        value += a * a / (pow(&sigma_sq, *m) * &pe_sq);
    }
    let numerators = subsets
        .into_iter()
        .zip(numer)
        .map(|((edges, _, ell, m), a)| (edges, ell, m, a))
        .collect();
    Ok(ConditionalExact { value, prob_event, numerators })
}

/// The good-subgraph bound `ρ^ℓ (2p)^m` or the bad-subgraph bound
/// `ρ^ℓ C(m, m_ℓ-1) q^{m-m_ℓ+1} (2p)^{m_ℓ-1}`, both times `σ^m`.
fn lemma_bound(ex: &ExactParams, spec: &ConditioningSpec, ell: u32, m: u32, bad: bool) -> BigRational {
    let two_p = BigRational::from_integer(BigInt::from(2)) * &ex.p;
    if !bad {
        return pow(&ex.rho, ell) * pow(&two_p, m);
    }
    let m_ell = spec.m_ell(ell).expect("bad classes lie in the table");
    let s = m - m_ell + 1;
    let binom = binomial_u64(m as u64, (m_ell - 1) as u64).expect("small binomial");
    pow(&ex.rho, ell)
        * BigRational::from_integer(BigInt::from(binom))
        * pow(&ex.q, s)
        * pow(&two_p, m_ell - 1)
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Tiny-instance exact conditional norm with the good/bad split and a
/// term-by-term check of both expectation bounds.
pub fn conditional_ldlr_exact_tiny(params: &ProblemParams, spec: &ConditioningSpec) -> Result<LdlrResult> {
    if spec.r != params.r {
        return Err(invalid!("spec built for r = {} but parameters have r = {}", spec.r, params.r));
    }
    let ex = ExactParams::from_params(params)?;
    let exact = conditional_exact(&ex, spec)?;
    let sigma_sq = ex.sigma_sq();

    let mut good_sum = BigRational::zero();
    let mut bad_sum = BigRational::zero();
    let (mut good_count, mut bad_count) = (0u64, 0u64);
    let mut checks = Vec::with_capacity(exact.numerators.len());
    let mut classes: BTreeMap<(u32, u32), (u64, BigRational)> = BTreeMap::new();
    let pe_sq = &exact.prob_event * &exact.prob_event;
    for (edges, ell, m, a) in &exact.numerators {
        let (ell, m) = (*ell, *m);
        let bad = spec.contains(ell, m);
        let sq = a * a / pow(&sigma_sq, m);
        if bad {
            bad_sum += &sq;
            bad_count += 1;
        } else {
            good_sum += &sq;
            good_count += 1;
        }
        let entry = classes.entry((ell, m)).or_insert((0, BigRational::zero()));
        entry.0 += 1;
        entry.1 += &sq / &pe_sq;
        let bound = lemma_bound(&ex, spec, ell, m, bad);
        let value = a.abs();
        checks.push(TermBoundCheck {
            edges: edges.clone(),
            ell,
            m,
            bad,
            value: to_f64(&value),
            bound: to_f64(&bound),
            holds: value <= bound,
        });
    }
    let terms = classes
        .into_iter()
        .map(|((ell, m), (count, term))| {
            let t = to_f64(&term);
            ClassTerm {
                ell,
                m,
                class_count: count.to_string(),
                log10_class_count: (count as f64).log10(),
                term: t,
                log10_term: t.log10(),
            }
        })
        .collect();
    let vm1 = &exact.value - BigRational::one();
    let mut result = LdlrResult::from_log10(Method::ConditionalExact, spec.degree, to_f64(&vm1).log10(), terms);
    result.value = to_f64(&exact.value);
    result.value_minus_one = to_f64(&vm1);
    result.conditional = Some(ConditionalSummary {
        prob_event: to_f64(&exact.prob_event),
        prob_event_exact: exact.prob_event.to_string(),
        good_sum: to_f64(&good_sum),
        bad_sum: to_f64(&bad_sum),
        good_count,
        bad_count,
        all_bounds_hold: checks.iter().all(|c| c.holds),
        checks,
    });
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ldlr::ldlr_norm_bruteforce_exact;

    #[test]
    fn trivial_spec_matches_bruteforce() {
        let params = ProblemParams::new(4, 2, 0.25, 0.5, 0.5).unwrap();
        let spec = ConditioningSpec::from_ratio(2, 1.5, 3, 0.1).unwrap();
        assert!(spec.is_trivial());
        let ex = ExactParams::from_params(&params).unwrap();
        let c = conditional_exact(&ex, &spec).unwrap();
        assert!(c.prob_event.is_one());
        assert_eq!(c.value, ldlr_norm_bruteforce_exact(&ex, 3).unwrap());
    }

    #[test]
    fn bounds_hold_with_dense_index_set() {
        let params = ProblemParams::new(4, 2, 0.3, 0.8, 0.3).unwrap();
        let spec = ConditioningSpec::from_ratio(2, 0.55, 3, 0.1).unwrap();
        assert!(!spec.is_trivial());
        let res = conditional_ldlr_exact_tiny(&params, &spec).unwrap();
        let summary = res.conditional.unwrap();
        assert!(summary.prob_event < 1.0 && summary.prob_event > 0.0);
        assert!(summary.bad_count > 0);
        assert!(summary.all_bounds_hold);
    }

    #[test]
    fn budget() {
        let params = ProblemParams::new(7, 2, 0.3, 0.8, 0.3).unwrap();
        let spec = ConditioningSpec::from_ratio(2, 1.0, 2, 0.1).unwrap();
        assert!(matches!(conditional_ldlr_exact_tiny(&params, &spec), Err(Error::TooLarge(_))));
    }
}
