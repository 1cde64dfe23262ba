//! Reproducible samplers for the null model `Q`, the planted model `P`, and
//! the rank-one-spike model, plus an exact enumerator for tiny instances.
//!
//! Every sampler consumes exactly one `u64` per vertex membership and one
//! per hyperedge, visiting hyperedges in rank order. An edge is present when
//! its draw falls below `floor(prob * 2^64)`.

mod aux;
mod exact;

use std::collections::BTreeSet;

use rand::RngCore;

use crate::error::Result;
use crate::hypergraph::{AdjacencyTensor, Combinations, Hypergraph};
use crate::params::ProblemParams;
use crate::rng::{bernoulli_threshold, Rng, StreamKey};

pub use aux::{
    aux_ldlr_upper_bound, aux_series_bound, aux_spike, sample_aux, sample_aux_with, AuxBound,
    AuxPlantedParams, AuxSample, AuxSpike, AuxTerm,
};
pub use exact::{enumerate_planted_exact, enumerate_planted_exact_with, ExactDistribution, Outcome};

/// A draw from the planted model: the planted vertex set `Z` and the
/// observed tensor `Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedSample {
    pub planted: BTreeSet<u32>,
    pub y: AdjacencyTensor,
}

impl PlantedSample {
    /// Planted-part subgraph `C = H[Z]`, as the list of present edges whose
    /// vertices all lie in `Z`.
    pub fn planted_edges(&self) -> Vec<Vec<u32>> {
        planted_edges(&self.planted, &self.y)
    }
}

/// Present edges of `y` contained in `z`, as sorted vertex tuples.
pub fn planted_edges(z: &BTreeSet<u32>, y: &AdjacencyTensor) -> Vec<Vec<u32>> {
    let zs: Vec<u32> = z.iter().copied().collect();
    let r = y.r();
    if zs.len() < r as usize {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut combos = Combinations::new(zs.len() as u32, r);
    let mut tuple = vec![0u32; r as usize];
    while let Some(idx) = combos.peek() {
        for (slot, &i) in tuple.iter_mut().zip(idx) {
            *slot = zs[i as usize];
        }
        if y.contains_sorted(&tuple) {
            out.push(tuple.clone());
        }
        combos.advance();
    }
    out
}

/// Draws from `Q`: every hyperedge present independently with probability `q`.
pub fn sample_null(params: &ProblemParams, seed: u64) -> Result<Hypergraph> {
    let mut rng = StreamKey::new(seed).rng();
    Ok(sample_null_with(params, &mut rng)?.to_hypergraph())
}

pub fn sample_null_with(params: &ProblemParams, rng: &mut Rng) -> Result<AdjacencyTensor> {
    let mut y = AdjacencyTensor::empty(params.n_u32()?, params.r)?;
    let thr = bernoulli_threshold(params.q);
    for idx in 0..y.len() {
        if rng.next_u64() < thr {
            y.set(idx, true);
        }
    }
    Ok(y)
}

/// Draws from `P`: memberships `z_i ~ Ber(ρ)`, then each hyperedge present
/// with probability `p` if it lies inside `Z` and `q` otherwise.
pub fn sample_planted(params: &ProblemParams, seed: u64) -> Result<PlantedSample> {
    let mut rng = StreamKey::new(seed).rng();
    sample_planted_with(params, &mut rng)
}

pub fn sample_planted_with(params: &ProblemParams, rng: &mut Rng) -> Result<PlantedSample> {
    let n = params.n_u32()?;
    let in_z = draw_memberships(n, params.rho, rng);
    let mut y = AdjacencyTensor::empty(n, params.r)?;
    let thr_p = bernoulli_threshold(params.p);
    let thr_q = bernoulli_threshold(params.q);
    let mut combos = Combinations::new(n, params.r);
    let mut idx = 0u64;
    while let Some(edge) = combos.peek() {
        let inside = edge.iter().all(|&v| in_z[v as usize]);
        let thr = if inside { thr_p } else { thr_q };
        if rng.next_u64() < thr {
            y.set(idx, true);
        }
        idx += 1;
        combos.advance();
    }
    let planted = (0..n).filter(|&v| in_z[v as usize]).collect();
    Ok(PlantedSample { planted, y })
}

pub(crate) fn draw_memberships(n: u32, rho: f64, rng: &mut Rng) -> Vec<bool> {
    let thr = bernoulli_threshold(rho);
    (0..n).map(|_| rng.next_u64() < thr).collect()
}
