//! The rank-one-spike planted model for graphs (`r = 2`).
//!
//! Each vertex carries `u_i = sqrt((1-ρ)/ρ)` if planted and
//! `-sqrt(ρ/(1-ρ))` otherwise, so `E[u_i] = 0` and `E[u_i²] = 1`. Given `u`,
//! the standardized edge value has conditional mean `λ u_i u_j`, i.e. the
//! edge is present with probability `q + σ λ u_i u_j`. The spike is fixed at
//! `λ = ρ(p-q) / (σ(1-ρ))`, the value making the planted-planted probability
//! exactly `p`.

use std::collections::BTreeSet;

use rand::RngCore;
use rand_distr::{Binomial, Distribution};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{AdjacencyTensor, Combinations};
use crate::params::ProblemParams;
use crate::rng::{bernoulli_threshold, Rng, StreamKey};

use super::draw_memberships;

/// Spike scalar and the per-class quantities it induces.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AuxSpike {
    pub lambda: f64,
    /// Standardized value of a present edge.
    pub a: f64,
    /// Standardized value of an absent edge.
    pub b: f64,
    pub u_planted: f64,
    pub u_other: f64,
    /// Edge probability when both, one, or neither endpoint is planted.
    pub prob_both: f64,
    pub prob_one: f64,
    pub prob_none: f64,
}

/// Parameters of one draw: the spike plus the realized vertex vector `u`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuxPlantedParams {
    pub lambda_spike: f64,
    pub a: f64,
    pub b: f64,
    pub u: Vec<f64>,
}

impl AuxPlantedParams {
    /// `+1` for planted vertices, `-1` otherwise.
    pub fn signs(&self) -> Vec<i8> {
        self.u.iter().map(|&x| if x > 0.0 { 1 } else { -1 }).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuxSample {
    pub params: AuxPlantedParams,
    pub planted: BTreeSet<u32>,
    pub y: AdjacencyTensor,
}

fn require_graph(params: &ProblemParams) -> Result<()> {
    if params.r != 2 {
        return Err(invalid!("the spike model is defined for r = 2 only (r = {})", params.r));
    }
    Ok(())
}

fn spike_value(params: &ProblemParams) -> f64 {
    params.rho * (params.p - params.q) / (params.sigma * (1.0 - params.rho))
}

/// Computes the spike and checks that every pair class gets a probability
/// in `[0, 1]`. Nothing is clamped.
pub fn aux_spike(params: &ProblemParams) -> Result<AuxSpike> {
    require_graph(params)?;
    let (q, rho, sigma) = (params.q, params.rho, params.sigma);
    let lambda = spike_value(params);
    let u_planted = ((1.0 - rho) / rho).sqrt();
    let u_other = -(rho / (1.0 - rho)).sqrt();
    let spike = AuxSpike {
        lambda,
        a: ((1.0 - q) / q).sqrt(),
        b: -(q / (1.0 - q)).sqrt(),
        u_planted,
        u_other,
        // Planted-planted is exactly p by the choice of λ.
        prob_both: params.p,
        prob_one: q + sigma * lambda * u_planted * u_other,
        prob_none: q + sigma * lambda * u_other * u_other,
    };
    for (name, prob) in [
        ("planted-planted", spike.prob_both),
        ("planted-unplanted", spike.prob_one),
        ("unplanted-unplanted", spike.prob_none),
    ] {
        if !(0.0..=1.0).contains(&prob) {
            return Err(Error::Infeasible(format!(
                "{name} edge probability q + σλu_iu_j = {prob} lies outside [0, 1]"
            )));
        }
    }
    Ok(spike)
}

pub fn sample_aux(params: &ProblemParams, seed: u64) -> Result<AuxSample> {
    let mut rng = StreamKey::new(seed).rng();
    sample_aux_with(params, &mut rng)
}

pub fn sample_aux_with(params: &ProblemParams, rng: &mut Rng) -> Result<AuxSample> {
    let spike = aux_spike(params)?;
    let n = params.n_u32()?;
    let in_z = draw_memberships(n, params.rho, rng);
    let thr = [
        bernoulli_threshold(spike.prob_none),
        bernoulli_threshold(spike.prob_one),
        bernoulli_threshold(spike.prob_both),
    ];
    let mut y = AdjacencyTensor::empty(n, 2)?;
    let mut combos = Combinations::new(n, 2);
    let mut idx = 0u64;
    while let Some(e) = combos.peek() {
        let k = in_z[e[0] as usize] as usize + in_z[e[1] as usize] as usize;
        if rng.next_u64() < thr[k] {
            y.set(idx, true);
        }
        idx += 1;
        combos.advance();
    }
    let u = in_z
        .iter()
        .map(|&z| if z { spike.u_planted } else { spike.u_other })
        .collect();
    Ok(AuxSample {
        params: AuxPlantedParams {
            lambda_spike: spike.lambda,
            a: spike.a,
            b: spike.b,
            u,
        },
        planted: (0..n).filter(|&v| in_z[v as usize]).collect(),
        y,
    })
}

/// One term `λ^{2d}/d! · Ê⟨u,v⟩^{2d}` of the bound series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AuxTerm {
    pub degree: u32,
    pub value: f64,
    pub std_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuxBound {
    pub lambda_spike: f64,
    pub value: f64,
    pub std_error: f64,
    pub trials: u64,
    pub terms: Vec<AuxTerm>,
}

/// Monte Carlo evaluation of `Σ_{d<=D} λ^{2d}/d! · E⟨u,v⟩^{2d}` for
/// independent copies `u`, `v` of the spike vector.
pub fn aux_ldlr_upper_bound(
    params: &ProblemParams,
    degree: u32,
    trials: u64,
    seed: u64,
) -> Result<AuxBound> {
    require_graph(params)?;
    aux_series_bound(spike_value(params), params.n, params.rho, degree, trials, seed)
}

/// The series for an arbitrary spike value. `⟨u,v⟩` depends only on how
/// many coordinates are planted in both copies and how many in exactly one,
/// so those two counts are drawn as binomials instead of drawing `u` and `v`.
pub fn aux_series_bound(
    lambda: f64,
    n: u64,
    rho: f64,
    degree: u32,
    trials: u64,
    seed: u64,
) -> Result<AuxBound> {
    if trials == 0 {
        return Err(invalid!("trials must be at least 1"));
    }
    if !(rho > 0.0 && rho < 1.0) {
        return Err(invalid!("ρ must lie in (0, 1) (ρ = {rho})"));
    }
    let both = (1.0 - rho) / rho;
    let one = -1.0;
    let none = rho / (1.0 - rho);
    let bin_both = Binomial::new(n, rho * rho).map_err(|e| invalid!("{e}"))?;
    let p_one_given_not_both = 2.0 * rho / (1.0 + rho);

    // coef[d] = λ^{2d} / d!
    let d_max = degree as usize;
    let mut coef = vec![1.0f64; d_max + 1];
    for d in 1..=d_max {
        coef[d] = coef[d - 1] * lambda * lambda / d as f64;
    }

    let mut rng = StreamKey::new(seed).rng();
    let mut sum = vec![0.0f64; d_max + 1];
    let mut sum_sq = vec![0.0f64; d_max + 1];
    let (mut tot, mut tot_sq) = (0.0f64, 0.0f64);
    for _ in 0..trials {
        let k_both = bin_both.sample(&mut rng);
        let rest = n - k_both;
        let k_one = Binomial::new(rest, p_one_given_not_both)
            .map_err(|e| invalid!("{e}"))?
            .sample(&mut rng);
        let k_none = rest - k_one;
        let x = k_both as f64 * both + k_one as f64 * one + k_none as f64 * none;
        let x2 = x * x;
        let mut pow = 1.0f64;
        let mut total = 0.0f64;
        for d in 0..=d_max {
            let t = coef[d] * pow;
            sum[d] += t;
            sum_sq[d] += t * t;
            total += t;
            pow *= x2;
        }
        tot += total;
        tot_sq += total * total;
    }
    let t = trials as f64;
    let se = |s: f64, s2: f64| {
        if trials < 2 {
            return 0.0;
        }
        let mean = s / t;
        let var = ((s2 / t - mean * mean) * t / (t - 1.0)).max(0.0);
        (var / t).sqrt()
    };
    let terms = (0..=d_max)
        .map(|d| AuxTerm {
            degree: d as u32,
            value: sum[d] / t,
            std_error: if d == 0 { 0.0 } else { se(sum[d], sum_sq[d]) },
        })
        .collect::<Vec<_>>();
    let value = if d_max == 0 { 1.0 } else { terms.iter().map(|x| x.value).sum() };
    Ok(AuxBound {
        lambda_spike: lambda,
        value,
        std_error: if d_max == 0 { 0.0 } else { se(tot, tot_sq) },
        trials,
        terms,
    })
}
