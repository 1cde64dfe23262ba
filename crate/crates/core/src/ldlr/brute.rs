use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use super::exact::{class_term, LogParams};
use super::{LdlrResult, Method};
use crate::error::{Error, Result};
use crate::hypergraph::{binomial_u64, Combinations};
use crate::params::{ExactParams, ProblemParams};

/// Largest `Σ_{d<=D} C(M, d)` the brute-force evaluators accept.
pub const BRUTE_FORCE_BUDGET: u64 = 10_000_000;

/// Vertex bitmasks of all edges of `K_n^r`, in rank order.
pub(crate) fn complete_edge_masks(n: u32, r: u32) -> Result<Vec<u64>> {
    if n > 64 {
        return Err(Error::TooLarge(format!("brute force needs n <= 64 (n = {n})")));
    }
    Ok(Combinations::new(n, r)
        .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect())
}

pub(crate) fn check_budget(m_total: u64, degree: u32) -> Result<()> {
    let mut total = 0u64;
    for d in 0..=degree as u64 {
        let c = binomial_u64(m_total, d).unwrap_or(u64::MAX);
        total = total.saturating_add(c);
        if total > BRUTE_FORCE_BUDGET {
            return Err(Error::TooLarge(format!(
                "Σ_(d <= {degree}) C({m_total}, d) exceeds the brute-force budget of {BRUTE_FORCE_BUDGET}"
            )));
        }
        if d >= m_total {
            break;
        }
    }
    Ok(())
}

/// Visits every subset of `masks` with at most `degree` elements, passing
/// the chosen indices and the union vertex mask.
pub(crate) fn for_each_subset<F>(masks: &[u64], degree: u32, mut f: F)
where
    F: FnMut(&[usize], u64),
{
    fn go<F: FnMut(&[usize], u64)>(
        masks: &[u64],
        degree: usize,
        start: usize,
        mult: &mut [u8; 64],
        union: u64,
        chosen: &mut Vec<usize>,
        f: &mut F,
    ) {
        f(chosen, union);
        if chosen.len() == degree {
            return;
        }
        for i in start..masks.len() {
            let e = masks[i];
            let mut u = union;
            let mut bits = e;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                mult[v] += 1;
                u |= 1 << v;
                bits &= bits - 1;
            }
            chosen.push(i);
            go(masks, degree, i + 1, mult, u, chosen, f);
            chosen.pop();
            let mut bits = e;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                mult[v] -= 1;
                bits &= bits - 1;
            }
        }
    }
    let mut mult = [0u8; 64];
    let mut chosen = Vec::with_capacity(degree as usize);
    go(masks, degree as usize, 0, &mut mult, 0, &mut chosen, &mut f);
}

/// Histogram of nonempty subsets of size `<= degree` by `(|V(S)|, |S|)`.
fn class_histogram(n: u32, r: u32, degree: u32) -> Result<BTreeMap<(u32, u32), u64>> {
    let masks = complete_edge_masks(n, r)?;
    check_budget(masks.len() as u64, degree)?;
    let mut hist = BTreeMap::new();
    for_each_subset(&masks, degree, |chosen, union| {
        if !chosen.is_empty() {
            *hist.entry((union.count_ones(), chosen.len() as u32)).or_insert(0u64) += 1;
        }
    });
    Ok(hist)
}

/// `Σ_{|S| <= D} E_P[φ_S]²` by direct enumeration of edge subsets of
/// `K_n^r`. Subsets are grouped by `(|V(S)|, |S|)` as they are visited.
pub fn ldlr_norm_bruteforce(params: &ProblemParams, degree: u32) -> Result<LdlrResult> {
    let n = params.n_u32()?;
    let hist = class_histogram(n, params.r, degree)?;
    let lp = LogParams::new(params);
    let mut terms = Vec::new();
    let mut sum = 0.0f64;
    for (&(ell, m), &count) in &hist {
        let w = lp.ln_class_weight(ell, m);
        let weight = w.as_ref().map_or(0.0, |x| x.to_f64().exp());
        sum += count as f64 * weight;
        terms.push(class_term(ell, m, &BigUint::from(count), w.as_ref()).0);
    }
    Ok(LdlrResult::from_log10(Method::BruteForce, degree, sum.log10(), terms))
}

/// The brute-force norm in exact arithmetic with the densities of `ex`:
/// `1 + Σ_S ρ^{2ℓ} (p-q)^{2m} / (q(1-q))^m`.
pub fn ldlr_norm_bruteforce_exact(ex: &ExactParams, degree: u32) -> Result<BigRational> {
    let hist = class_histogram(ex.n, ex.r, degree)?;
    let rho2 = &ex.rho * &ex.rho;
    let gap = &ex.p - &ex.q;
    let signal = &gap * &gap / ex.sigma_sq();
    let mut total = BigRational::one();
    for (&(ell, m), &count) in &hist {
        let mut t = BigRational::from_integer(count.into());
        for _ in 0..ell {
            t *= &rho2;
        }
        for _ in 0..m {
            t *= &signal;
        }
        total += t;
    }
    Ok(total)
}
