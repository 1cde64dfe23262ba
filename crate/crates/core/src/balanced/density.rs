use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;

/// Largest vertex count accepted by the exhaustive density routines.
pub const MAX_DENSITY_VERTICES: usize = 20;

/// The maximum of `|E(H[V'])| / |V'|` over nonempty `V'`, with one
/// attaining vertex set. Among attaining sets the witness is the one with
/// the most vertices, then the numerically smallest bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityCertificate {
    pub max_density: Ratio<u64>,
    pub witness: BTreeSet<u32>,
}

/// Induced edge counts for every vertex subset of a compactly relabeled
/// hypergraph.
pub(crate) struct SubsetTable {
    /// Original vertex id of each compact index.
    pub labels: Vec<u32>,
    /// `counts[mask]` is the number of edges inside `mask`.
    pub counts: Vec<u32>,
}

impl SubsetTable {
    pub fn build(h: &Hypergraph) -> Result<Self> {
        let labels: Vec<u32> = h.covered_vertices().into_iter().collect();
        if labels.len() > MAX_DENSITY_VERTICES {
            return Err(Error::TooLarge(format!(
                "exhaustive density check supports at most {MAX_DENSITY_VERTICES} vertices (got {})",
                labels.len()
            )));
        }
        let k = labels.len();
        let mut counts = vec![0u32; 1 << k];
        for e in h.edges() {
            let mask = e.vertices().iter().fold(0usize, |m, v| {
                m | 1 << labels.binary_search(v).expect("covered vertex")
            });
            counts[mask] += 1;
        }
        // Subset-sum transform: counts[S] = Σ_{T ⊆ S} counts[T].
        for bit in 0..k {
            for mask in 0..counts.len() {
                if mask >> bit & 1 == 1 {
                    counts[mask] += counts[mask ^ 1 << bit];
                }
            }
        }
        Ok(SubsetTable { labels, counts })
    }

    pub fn vertex_set(&self, mask: usize) -> BTreeSet<u32> {
        (0..self.labels.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| self.labels[b])
            .collect()
    }
}

/// Exact maximum sub-density over nonempty subsets of the covered vertices.
/// Vertices of the ambient `[n]` that lie in no edge are ignored, so the
/// hypergraph is always read as edge-induced.
pub fn max_subgraph_density(h: &Hypergraph) -> Result<DensityCertificate> {
    if h.edge_count() == 0 {
        return Err(invalid!("hypergraph has no edges"));
    }
    let table = SubsetTable::build(h)?;
    let mut best = (0u64, 1u64, 0usize);
    for mask in 1..table.counts.len() {
        let (e, v) = (table.counts[mask] as u64, mask.count_ones() as u64);
        let (be, bv, _) = best;
        // e/v > be/bv, or equal with more vertices.
        if e * bv > be * v || (e * bv == be * v && v > bv) {
            best = (e, v, mask);
        }
    }
    Ok(DensityCertificate {
        max_density: Ratio::new(best.0, best.1),
        witness: table.vertex_set(best.2),
    })
}

/// Every vertex subset attaining the maximum sub-density.
pub fn density_witnesses(h: &Hypergraph) -> Result<Vec<BTreeSet<u32>>> {
    let best = max_subgraph_density(h)?.max_density;
    let table = SubsetTable::build(h)?;
    Ok((1..table.counts.len())
        .filter(|&mask| {
            Ratio::new(table.counts[mask] as u64, mask.count_ones() as u64) == best
        })
        .map(|mask| table.vertex_set(mask))
        .collect())
}

/// `|E(H)| / |V(H)|` with `V(H)` the covered vertices.
pub fn density(h: &Hypergraph) -> Ratio<u64> {
    Ratio::new(h.edge_count() as u64, h.covered_vertices().len().max(1) as u64)
}

/// Balanced means no nonempty subset is strictly denser than the whole.
pub fn is_balanced(h: &Hypergraph) -> Result<(bool, DensityCertificate)> {
    let cert = max_subgraph_density(h)?;
    Ok((cert.max_density <= density(h), cert))
}

/// Evaluates `(|E(H)| - |E(H')|) / (|V(H)| - |V(H')|) >= |E(H)| / |V(H)|`
/// for a balanced `H` and an edge-induced subhypergraph `H'` with strictly
/// fewer vertices.
pub fn check_complement_inequality(h: &Hypergraph, sub: &Hypergraph) -> Result<bool> {
    if !is_balanced(h)?.0 {
        return Err(invalid!("H is not balanced"));
    }
    if sub.r() != h.r() {
        return Err(invalid!("H' has uniformity {} but H has {}", sub.r(), h.r()));
    }
    if !sub.edges().iter().all(|e| h.contains(e)) {
        return Err(invalid!("H' is not a subhypergraph of H"));
    }
    let (vh, vs) = (h.covered_vertices(), sub.covered_vertices());
    if vs.len() >= vh.len() {
        return Err(invalid!("V(H') must be a proper subset of V(H)"));
    }
    let num = (h.edge_count() - sub.edge_count()) as u64;
    let den = (vh.len() - vs.len()) as u64;
    Ok(Ratio::new(num, den) >= density(h))
}
