use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{count_isolated_free_edge_sets, AdjacencyTensor};
use crate::models::{planted_edges, sample_planted_with};
use crate::params::ProblemParams;
use crate::parallel::try_map_indexed;
use crate::rng::StreamKey;

pub const DEFAULT_DELTA: f64 = 0.1;
/// Largest planted-part edge count `event_holds` will search.
pub const EVENT_EDGE_BUDGET: usize = 5_000;
/// Largest number of connected edge subsets visited per call.
pub const EVENT_NODE_BUDGET: u64 = 10_000_000;

/// Parameters of the event that the planted part contains no subgraph with
/// `(|V(S)|, |S|)` in the dense index set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditioningSpec {
    pub r: u32,
    pub delta: f64,
    pub degree: u32,
    /// `γ/α`.
    pub ratio: f64,
    /// `(ℓ, m_ℓ)` for `r <= ℓ <= rD`, with `m_ℓ = ceil(ℓ(γ/α + δ))`.
    pub m_table: Vec<(u32, u32)>,
    /// Pairs `(ℓ, m)` with `m_ℓ <= m <= D` whose class is nonempty.
    pub index_set: Vec<(u32, u32)>,
}

impl ConditioningSpec {
    /// Builds the spec from `γ/α` directly.
    pub fn from_ratio(r: u32, ratio: f64, degree: u32, delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(invalid!("δ must be positive (δ = {delta})"));
        }
        if !(ratio > 0.0 && ratio.is_finite()) {
            return Err(invalid!("γ/α must be positive (got {ratio})"));
        }
        let c = ratio + delta;
        let m_table: Vec<(u32, u32)> = (r..=r * degree.max(1))
            .map(|ell| {
                let x = ell as f64 * c;
                // Absorb rounding in `ℓ(γ/α + δ)` so exact products such as
                // 5 × 1.6 do not round up past an integer.
                let m = (x - 1e-9 * x.max(1.0)).ceil().max(0.0);
                (ell, m.min(u32::MAX as f64) as u32)
            })
            .collect();
        let mut index_set = Vec::new();
        for &(ell, m_ell) in &m_table {
            for m in m_ell.max(1)..=degree {
                if !count_isolated_free_edge_sets(ell, m, r).is_zero() {
                    index_set.push((ell, m));
                }
            }
        }
        Ok(ConditioningSpec {
            r,
            delta,
            degree,
            ratio,
            m_table,
            index_set,
        })
    }

    /// `m_ℓ`, or `None` outside the table's range.
    pub fn m_ell(&self, ell: u32) -> Option<u32> {
        let i = ell.checked_sub(self.r)? as usize;
        self.m_table.get(i).map(|&(_, m)| m)
    }

    pub fn contains(&self, ell: u32, m: u32) -> bool {
        self.index_set.binary_search(&(ell, m)).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.index_set.is_empty()
    }
}

pub fn build_conditioning_spec(params: &ProblemParams, delta: f64, degree: u32) -> Result<ConditioningSpec> {
    ConditioningSpec::from_ratio(params.r, params.gamma / params.alpha, degree, delta)
}

/// Whether the planted part `C = H[Z]` avoids every class in the index set.
pub fn event_holds(
    z: &BTreeSet<u32>,
    y: &AdjacencyTensor,
    params: &ProblemParams,
    spec: &ConditioningSpec,
) -> Result<bool> {
    if y.n() as u64 != params.n || y.r() != params.r || spec.r != params.r {
        return Err(invalid!("tensor, parameters and spec disagree on (n, r)"));
    }
    if spec.is_trivial() {
        return Ok(true);
    }
    event_holds_in(&planted_edges(z, y), spec)
}

/// The event on an explicit planted edge list.
///
/// A subset violating `|S| >= m_{|V(S)|}` has a violating connected
/// component, because `m_ℓ` is a ceiling of a linear function of `ℓ`; so
/// only connected edge subsets are enumerated. Extension stops once
/// `m_{|V(S)|}` exceeds `D`, since `m_ℓ` never decreases in `ℓ`.
pub fn event_holds_in(edges: &[Vec<u32>], spec: &ConditioningSpec) -> Result<bool> {
    if spec.is_trivial() || edges.is_empty() {
        return Ok(true);
    }
    if edges.len() > EVENT_EDGE_BUDGET {
        return Err(Error::TooLarge(format!(
            "planted part has {} edges; the event check supports at most {EVENT_EDGE_BUDGET}",
            edges.len()
        )));
    }
    // Line graph: edges adjacent when they share a vertex.
    let k = edges.len();
    let mut adj = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if edges[i].iter().any(|v| edges[j].contains(v)) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut search = Esu {
        edges,
        adj: &adj,
        spec,
        nodes: 0,
        in_sub: vec![false; k],
        near: vec![0u32; k],
        vert_mult: std::collections::HashMap::new(),
    };
    for v in 0..k {
        search.push(v);
        let ext: Vec<usize> = adj[v].iter().copied().filter(|&u| u > v).collect();
        let found = search.extend(1, ext, v)?;
        search.pop(v);
        if found {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Esu<'a> {
    edges: &'a [Vec<u32>],
    adj: &'a [Vec<usize>],
    spec: &'a ConditioningSpec,
    nodes: u64,
    in_sub: Vec<bool>,
    /// Number of subgraph members each line-graph vertex is adjacent to.
    near: Vec<u32>,
    vert_mult: std::collections::HashMap<u32, u32>,
}

impl Esu<'_> {
    fn push(&mut self, e: usize) {
        self.in_sub[e] = true;
        for &u in &self.adj[e] {
            self.near[u] += 1;
        }
        for &v in &self.edges[e] {
            *self.vert_mult.entry(v).or_insert(0) += 1;
        }
    }

    fn pop(&mut self, e: usize) {
        self.in_sub[e] = false;
        for &u in &self.adj[e] {
            self.near[u] -= 1;
        }
        for &v in &self.edges[e] {
            let c = self.vert_mult.get_mut(&v).expect("present");
            *c -= 1;
            if *c == 0 {
                self.vert_mult.remove(&v);
            }
        }
    }

    /// Returns true when a violating subset is found.
    fn extend(&mut self, size: u32, ext: Vec<usize>, root: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > EVENT_NODE_BUDGET {
            return Err(Error::TooLarge(format!(
                "event check visited more than {EVENT_NODE_BUDGET} edge subsets"
            )));
        }
        let ell = self.vert_mult.len() as u32;
        let m_ell = match self.spec.m_ell(ell) {
            Some(m) => m,
            None => return Ok(false),
        };
        if size >= m_ell && self.spec.contains(ell, size) {
            return Ok(true);
        }
        if size == self.spec.degree || m_ell > self.spec.degree {
            return Ok(false);
        }
        let mut ext = ext;
        while let Some(w) = ext.pop() {
            // Exclusive neighbours of w: beyond the root, outside the
            // current subgraph and not adjacent to it.
            let mut next = ext.clone();
            for &u in &self.adj[w] {
                if u > root && !self.in_sub[u] && self.near[u] == 0 && !next.contains(&u) {
                    next.push(u);
                }
            }
            self.push(w);
            let found = self.extend(size + 1, next, root)?;
            self.pop(w);
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Monte Carlo estimate of `P(E)` with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EventEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub trials: u64,
}

/// Fraction of planted draws (trial `t` uses child stream `t` of `seed`)
/// on which the event holds.
pub fn estimate_event_probability(
    params: &ProblemParams,
    spec: &ConditioningSpec,
    trials: u64,
    seed: u64,
) -> Result<EventEstimate> {
    if trials == 0 {
        return Err(invalid!("trials must be at least 1"));
    }
    if spec.is_trivial() {
        return Ok(EventEstimate { estimate: 1.0, std_error: 0.0, trials });
    }
    let root = StreamKey::new(seed);
    let hits = try_map_indexed(trials, |t| {
        let draw = sample_planted_with(params, &mut root.child(t).rng())?;
        event_holds(&draw.planted, &draw.y, params, spec)
    })?;
    let k = hits.iter().filter(|&&h| h).count() as f64;
    let t = trials as f64;
    let est = k / t;
    Ok(EventEstimate {
        estimate: est,
        std_error: (est * (1.0 - est) / t).sqrt(),
        trials,
    })
}
