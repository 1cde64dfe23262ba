//! Core combinatorial types: hyperedges, hypergraphs, ranked adjacency
//! tensors and edge-induced subgraphs.

mod count;
mod rank;
pub mod text;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub use count::{count_isolated_free_edge_sets, count_subgraph_class};
pub use rank::{binomial_big, binomial_u64, edge_count, rank_edge, unrank_edge, Combinations};
pub(crate) use rank::rank_sorted;

/// An r-subset of the vertex set, stored as strictly increasing 0-based ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hyperedge(Vec<u32>);

impl Hyperedge {
    /// Builds an edge from 0-based ids in any order; rejects repeats.
    pub fn new(mut vertices: Vec<u32>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid!("hyperedge has a repeated vertex"));
        }
        Ok(Hyperedge(vertices))
    }

    /// Builds an edge from 1-based ids, as they appear in files.
    pub fn from_one_based(vertices: &[u32]) -> Result<Self> {
        if vertices.contains(&0) {
            return Err(invalid!("vertex ids are 1-based"));
        }
        Self::new(vertices.iter().map(|v| v - 1).collect())
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<u32>) -> Self {
        Hyperedge(vertices)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

/// An r-uniform hypergraph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: u32,
    r: u32,
    edges: BTreeSet<Hyperedge>,
}

impl Hypergraph {
    pub fn new(n: u32, r: u32) -> Result<Self> {
        if r < 2 {
            return Err(invalid!("uniformity r = {r} must be at least 2"));
        }
        if n < r {
            return Err(invalid!("n = {n} must be at least r = {r}"));
        }
        Ok(Hypergraph {
            n,
            r,
            edges: BTreeSet::new(),
        })
    }

    pub fn from_edges<I>(n: u32, r: u32, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Hyperedge>,
    {
        let mut h = Self::new(n, r)?;
        for e in edges {
            h.insert(e)?;
        }
        Ok(h)
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_one_based(n: u32, r: u32, edges: &[&[u32]]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|e| Hyperedge::from_one_based(e))
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(n, r, edges)
    }

    /// The complete hypergraph `K_n^r`.
    pub fn complete(n: u32, r: u32) -> Result<Self> {
        let mut h = Self::new(n, r)?;
        h.edges = Combinations::new(n, r)
            .map(Hyperedge::from_sorted_unchecked)
            .collect();
        Ok(h)
    }

    /// Inserts an edge; returns whether it was new.
    pub fn insert(&mut self, edge: Hyperedge) -> Result<bool> {
        if edge.len() != self.r as usize {
            return Err(invalid!(
                "edge {edge} has {} vertices, expected {}",
                edge.len(),
                self.r
            ));
        }
        if edge.vertices().iter().any(|&v| v >= self.n) {
            return Err(invalid!("edge {edge} has a vertex outside [1, {}]", self.n));
        }
        Ok(self.edges.insert(edge))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn edges(&self) -> &BTreeSet<Hyperedge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, edge: &Hyperedge) -> bool {
        self.edges.contains(edge)
    }

    /// Vertices that lie in at least one edge.
    pub fn covered_vertices(&self) -> BTreeSet<u32> {
        self.edges
            .iter()
            .flat_map(|e| e.vertices().iter().copied())
            .collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.covered_vertices().len() < self.n as usize
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Applies a vertex relabeling `v -> perm[v]`.
    pub fn relabeled(&self, perm: &[u32]) -> Result<Self> {
        if perm.len() != self.n as usize {
            return Err(invalid!("permutation has wrong length"));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Hyperedge::new(e.vertices().iter().map(|&v| perm[v as usize]).collect()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(self.n, self.r, edges)
    }

    pub fn to_tensor(&self) -> AdjacencyTensor {
        let mut y = AdjacencyTensor::empty(self.n, self.r)
            .expect("hypergraph dimensions always admit a tensor");
        for e in &self.edges {
            let idx = rank_sorted(e.vertices(), self.n as u64, y.len());
            y.set(idx, true);
        }
        y
    }
}

/// One presence bit per ranked hyperedge index in `[0, M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyTensor {
    n: u32,
    r: u32,
    len: u64,
    bits: Vec<u64>,
}

/// Tensors above this many entries are rejected.
pub const MAX_TENSOR_ENTRIES: u64 = 1 << 34;

impl AdjacencyTensor {
    pub fn empty(n: u32, r: u32) -> Result<Self> {
        if r < 2 || n < r {
            return Err(invalid!("need n >= r >= 2, got n = {n}, r = {r}"));
        }
        let len = edge_count(n as u64, r)?;
        if len > MAX_TENSOR_ENTRIES {
            return Err(crate::Error::TooLarge(format!(
                "adjacency tensor with {len} entries"
            )));
        }
        Ok(AdjacencyTensor {
            n,
            r,
            len,
            bits: vec![0; len.div_ceil(64) as usize],
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `M = C(n, r)`.
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, index: u64) -> bool {
        (self.bits[(index / 64) as usize] >> (index % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: u64, present: bool) {
        let word = &mut self.bits[(index / 64) as usize];
        let mask = 1u64 << (index % 64);
        if present {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    /// Presence of the edge spanned by a strictly increasing vertex tuple.
    #[inline]
    pub fn contains_sorted(&self, vertices: &[u32]) -> bool {
        self.get(rank_sorted(vertices, self.n as u64, self.len))
    }

    pub fn count_present(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Indices of present edges in increasing order.
    pub fn present_indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let tz = word.trailing_zeros() as u64;
                word &= word - 1;
                Some(w as u64 * 64 + tz)
            })
        })
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        let mut h = Hypergraph::new(self.n, self.r).expect("tensor dimensions are valid");
        for idx in self.present_indices() {
            let e = unrank_edge(idx, self.n as u64, self.r).expect("index in range");
            h.edges.insert(e);
        }
        h
    }
}

/// A set of hyperedges, viewed as the subgraph they induce. Its vertex set
/// is the union of its edges, so it never has isolated vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeSubgraph {
    edges: BTreeSet<Hyperedge>,
}

impl EdgeSubgraph {
    pub fn new<I: IntoIterator<Item = Hyperedge>>(edges: I) -> Self {
        EdgeSubgraph {
            edges: edges.into_iter().collect(),
        }
    }

    pub fn edges(&self) -> &BTreeSet<Hyperedge> {
        &self.edges
    }

    /// `V(S)`.
    pub fn induced_vertices(&self) -> BTreeSet<u32> {
        self.edges
            .iter()
            .flat_map(|e| e.vertices().iter().copied())
            .collect()
    }

    /// Number of induced vertices `ℓ`.
    pub fn ell(&self) -> usize {
        self.induced_vertices().len()
    }

    /// Number of edges `m`.
    pub fn m(&self) -> usize {
        self.edges.len()
    }
}

/// `V(S)` for an edge set.
pub fn induced_vertices(s: &EdgeSubgraph) -> BTreeSet<u32> {
    s.induced_vertices()
}
