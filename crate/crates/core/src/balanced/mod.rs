//! Balanced hypergraphs: exact density certificates, the complement
//! inequality, and search for a balanced motif with a prescribed
//! edge/vertex ratio.

mod aut;
mod density;
mod search;

use num_rational::{BigRational, Ratio};
use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph};

pub use aut::count_automorphisms;
pub use density::{
    check_complement_inequality, density, density_witnesses, is_balanced, max_subgraph_density,
    DensityCertificate, MAX_DENSITY_VERTICES,
};
pub use search::{search_interval, simplest_between, MAX_MOTIF_VERTICES, MAX_SEARCH_NODES};

/// A balanced motif on vertices `0..ell` with no isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedMotif {
    pub motif: Hypergraph,
    pub ell: u32,
    pub m: u32,
    pub ratio: Ratio<u64>,
    pub aut_count: u64,
    pub certificate: DensityCertificate,
}

impl BalancedMotif {
    /// Relabels the covered vertices of `h` onto `0..ell` (order preserving),
    /// certifies balancedness and counts automorphisms.
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        let covered: Vec<u32> = h.covered_vertices().into_iter().collect();
        if covered.is_empty() {
            return Err(invalid!("motif has no edges"));
        }
        if covered.len() > MAX_MOTIF_VERTICES as usize {
            return Err(Error::TooLarge(format!(
                "motifs are limited to {MAX_MOTIF_VERTICES} vertices (got {})",
                covered.len()
            )));
        }
        let ell = covered.len() as u32;
        let pos = |v: &u32| covered.binary_search(v).expect("covered") as u32;
        let edges = h
            .edges()
            .iter()
            .map(|e| Hyperedge::new(e.vertices().iter().map(pos).collect()))
            .collect::<Result<Vec<_>>>()?;
        let motif = Hypergraph::from_edges(ell, h.r(), edges)?;
        let (balanced, certificate) = is_balanced(&motif)?;
        if !balanced {
            return Err(invalid!(
                "motif is not balanced: a subset has density {} > {}",
                certificate.max_density,
                density(&motif)
            ));
        }
        let m = motif.edge_count() as u32;
        let masks = edge_masks(&motif);
        Ok(BalancedMotif {
            aut_count: count_automorphisms(ell as usize, &masks),
            ratio: Ratio::new(m as u64, ell as u64),
            motif,
            ell,
            m,
            certificate,
        })
    }

    pub fn r(&self) -> u32 {
        self.motif.r()
    }

    /// Vertex bitmask of each edge, in rank order.
    pub fn edge_masks(&self) -> Vec<u32> {
        edge_masks(&self.motif)
    }

    /// Certificate and motif as JSON; vertex ids are 1-based.
    pub fn to_json(&self) -> Value {
        let edges: Vec<Vec<u32>> = self
            .motif
            .edges()
            .iter()
            .map(|e| e.vertices().iter().map(|v| v + 1).collect())
            .collect();
        json!({
            "r": self.r(),
            "ell": self.ell,
            "m": self.m,
            "ratio": self.ratio.to_string(),
            "maxSubDensity": self.certificate.max_density.to_string(),
            "witness": self.certificate.witness.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "autCount": self.aut_count,
            "edges": edges,
        })
    }

    /// Rebuilds a motif from [`BalancedMotif::to_json`] output, re-running
    /// every check rather than trusting the certificate.
    pub fn from_json(value: &Value) -> Result<Self> {
        let r = value["r"].as_u64().ok_or_else(|| invalid!("motif JSON lacks \"r\""))? as u32;
        let ell = value["ell"].as_u64().ok_or_else(|| invalid!("motif JSON lacks \"ell\""))? as u32;
        let raw = value["edges"]
            .as_array()
            .ok_or_else(|| invalid!("motif JSON lacks \"edges\""))?;
        let mut edges = Vec::with_capacity(raw.len());
        for e in raw {
            let vs = e
                .as_array()
                .ok_or_else(|| invalid!("edge is not an array"))?
                .iter()
                .map(|v| v.as_u64().map(|x| x as u32).ok_or_else(|| invalid!("bad vertex id")))
                .collect::<Result<Vec<_>>>()?;
            edges.push(Hyperedge::from_one_based(&vs)?);
        }
        let h = Hypergraph::from_edges(ell, r, edges)?;
        let motif = Self::from_hypergraph(&h)?;
        if motif.ell != ell {
            return Err(invalid!("motif JSON has isolated vertices"));
        }
        if let Some(aut) = value["autCount"].as_u64() {
            if aut != motif.aut_count {
                return Err(invalid!("autCount {aut} disagrees with recomputed {}", motif.aut_count));
            }
        }
        Ok(motif)
    }
}

fn edge_masks(h: &Hypergraph) -> Vec<u32> {
    h.edges()
        .iter()
        .map(|e| e.vertices().iter().fold(0u32, |m, v| m | 1 << v))
        .collect()
}

/// Outcome of [`find_balanced_motif`]: the motif and the bracket it was
/// selected from.
#[derive(Debug, Clone, PartialEq)]
pub struct MotifSearch {
    pub motif: BalancedMotif,
    pub lower: BigRational,
    pub upper: BigRational,
    pub target: Ratio<u64>,
}

/// Finds the canonical balanced motif whose ratio is the simplest fraction
/// in `(1/β, γ/α)`. Requires `γ < 1/2` and `α < βγ`.
pub fn find_balanced_motif(alpha: f64, beta: f64, gamma: f64, r: u32) -> Result<BalancedMotif> {
    find_balanced_motif_detailed(alpha, beta, gamma, r).map(|s| s.motif)
}

pub fn find_balanced_motif_detailed(alpha: f64, beta: f64, gamma: f64, r: u32) -> Result<MotifSearch> {
    if r < 2 {
        return Err(invalid!("constraint r >= 2 violated (r = {r})"));
    }
    if !(alpha > 0.0 && beta > 0.0 && beta < (r - 1) as f64 && gamma > 0.0 && gamma < 1.0) {
        return Err(invalid!(
            "need α > 0, 0 < β < r - 1, 0 < γ < 1 (α = {alpha}, β = {beta}, γ = {gamma})"
        ));
    }
    if !(gamma < 0.5 && alpha < beta * gamma) {
        return Err(Error::Regime(format!(
            "motif test needs γ < 1/2 and α < βγ (α = {alpha}, βγ = {}, γ = {gamma})",
            beta * gamma
        )));
    }
    let (lower, upper) = search_interval(alpha, beta, gamma)?;
    if lower >= upper {
        return Err(Error::NotFound(format!(
            "interval (1/β, γ/α) is narrower than the 1e-9 bracket (α = {alpha}, β = {beta}, γ = {gamma})"
        )));
    }
    let target_big = simplest_between(&lower, Some(&upper));
    let target = search::small_ratio(&target_big)
        .ok_or_else(|| Error::NotFound(format!("target ratio {target_big} is too large to search")))?;
    for (ell, m) in search::candidate_sizes(target, r) {
        if let Some(masks) = search::canonical_balanced(ell, m, r)? {
            let edges = masks
                .iter()
                .map(|&mask| Hyperedge::new((0..ell).filter(|v| mask >> v & 1 == 1).collect()))
                .collect::<Result<Vec<_>>>()?;
            let motif = BalancedMotif::from_hypergraph(&Hypergraph::from_edges(ell, r, edges)?)?;
            debug_assert_eq!(motif.ratio, search::gcd_ratio(m as u64, ell as u64));
            return Ok(MotifSearch { motif, lower, upper, target });
        }
    }
    Err(Error::NotFound(format!(
        "no balanced {r}-uniform motif with ratio {target} on at most {MAX_MOTIF_VERTICES} vertices"
    )))
}
