use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::balanced::BalancedMotif;
use crate::hypergraph::{binomial_big, unrank_edge, AdjacencyTensor, Hypergraph};
use crate::params::{ln_binomial, ProblemParams};

/// Copies of a motif inside a host hypergraph, counted as injective vertex
/// maps sending every motif edge to a host edge, divided by `|Aut|`.
pub fn count_motif(h: &Hypergraph, motif: &BalancedMotif) -> u64 {
    let edges: Vec<Vec<u32>> = h.edges().iter().map(|e| e.vertices().to_vec()).collect();
    MotifCounter::new(motif).count_edges(h.n(), edges)
}

/// Same as [`count_motif`] on a tensor.
pub fn count_motif_tensor(y: &AdjacencyTensor, motif: &BalancedMotif) -> u64 {
    MotifCounter::new(motif).count_tensor(y)
}

/// Embedding plan for one motif, reusable across hosts.
#[derive(Debug, Clone)]
pub struct MotifCounter {
    r: u32,
    ell: usize,
    aut: u64,
    /// For each position in the search order, an earlier position whose image's
    /// host neighbors are the candidates, if any.
    anchor: Vec<Option<usize>>,
    /// Motif edges (as search positions) completed at each position.
    closing: Vec<Vec<Vec<usize>>>,
}

impl MotifCounter {
    pub fn new(motif: &BalancedMotif) -> Self {
        let ell = motif.ell as usize;
        let edges: Vec<Vec<usize>> = motif
            .motif
            .edges()
            .iter()
            .map(|e| e.vertices().iter().map(|&v| v as usize).collect())
            .collect();
        let mut adj = vec![Vec::new(); ell];
        for e in &edges {
            for &a in e {
                for &b in e {
                    if a != b && !adj[a].contains(&b) {
                        adj[a].push(b);
                    }
                }
            }
        }
        // Breadth-first order, highest degree first within each component.
        let mut order = Vec::with_capacity(ell);
        let mut seen = vec![false; ell];
        while order.len() < ell {
            let start = (0..ell)
                .filter(|&v| !seen[v])
                .max_by_key(|&v| (adj[v].len(), std::cmp::Reverse(v)))
                .expect("unseen vertex");
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut pos = vec![0usize; ell];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let anchor = (0..ell)
            .map(|i| adj[order[i]].iter().map(|&w| pos[w]).filter(|&j| j < i).min())
            .collect();
        let mut closing = vec![Vec::new(); ell];
        for e in &edges {
            let ps: Vec<usize> = e.iter().map(|&v| pos[v]).collect();
            let last = *ps.iter().max().expect("nonempty edge");
            closing[last].push(ps);
        }
        MotifCounter {
            r: motif.r(),
            ell,
            aut: motif.aut_count,
            anchor,
            closing,
        }
    }

    pub fn count_tensor(&self, y: &AdjacencyTensor) -> u64 {
        let edges = y
            .present_indices()
            .map(|i| {
                unrank_edge(i, y.n() as u64, y.r())
                    .expect("present index in range")
                    .vertices()
                    .to_vec()
            })
            .collect();
        self.count_edges(y.n(), edges)
    }

    /// Counts copies in the host on `n` vertices with the given sorted edges.
    pub fn count_edges(&self, n: u32, edges: Vec<Vec<u32>>) -> u64 {
        if edges.first().is_some_and(|e| e.len() != self.r as usize) {
            return 0;
        }
        let mut nbrs = vec![Vec::new(); n as usize];
        for e in &edges {
            for &a in e {
                for &b in e {
                    if a != b {
                        nbrs[a as usize].push(b);
                    }
                }
            }
        }
        for list in &mut nbrs {
            list.sort_unstable();
            list.dedup();
        }
        let set: HashSet<Vec<u32>> = edges.into_iter().collect();
        let mut img = vec![0u32; self.ell];
        let mut used = vec![false; n as usize];
        let mut key = vec![0u32; self.r as usize];
        let mut total = 0u64;
        self.extend(0, n, &nbrs, &set, &mut img, &mut used, &mut key, &mut total);
        total / self.aut
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        i: usize,
        n: u32,
        nbrs: &[Vec<u32>],
        set: &HashSet<Vec<u32>>,
        img: &mut [u32],
        used: &mut [bool],
        key: &mut [u32],
        total: &mut u64,
    ) {
        if i == self.ell {
            *total += 1;
            return;
        }
        let all: Vec<u32>;
        let cands: &[u32] = match self.anchor[i] {
            Some(j) => &nbrs[img[j] as usize],
            None => {
                all = (0..n).collect();
                &all
            }
        };
        for &w in cands {
            if used[w as usize] {
                continue;
            }
            img[i] = w;
            let ok = self.closing[i].iter().all(|e| {
                for (slot, &p) in key.iter_mut().zip(e) {
                    *slot = img[p];
                }
                key.sort_unstable();
                set.contains(&key[..])
            });
            if ok {
                used[w as usize] = true;
                self.extend(i + 1, n, nbrs, set, img, used, key, total);
                used[w as usize] = false;
            }
        }
    }
}

/// `N = C(n, ℓ) · ℓ! / |Aut|`, the number of copies in the complete
/// hypergraph on `n` vertices.
pub fn compute_n(motif: &BalancedMotif, n: u64) -> BigUint {
    let fact: BigUint = (1..=motif.ell as u64).product();
    binomial_big(n, motif.ell as u64) * fact / motif.aut_count
}

/// Moments of the motif count `T`. `eq` and `lambda_lb` are exact
/// formulas; the two variance entries are upper bounds. Each value is also
/// given as a natural log so that huge instances stay representable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MotifMoments {
    pub eq: f64,
    pub lambda_lb: f64,
    pub var_q_bound: f64,
    pub var_p_bound: f64,
    pub ln_n_copies: f64,
    pub ln_eq: f64,
    pub ln_lambda_lb: f64,
    pub ln_var_q_bound: f64,
    pub ln_var_p_bound: f64,
    pub eq_is_exact: bool,
    pub lambda_lb_is_bound: bool,
    pub var_q_is_bound: bool,
    pub var_p_is_bound: bool,
}

pub fn exact_moments_motif_stat(params: &ProblemParams, motif: &BalancedMotif) -> MotifMoments {
    let (l, m, r) = (motif.ell as f64, motif.m as f64, motif.r() as f64);
    let ln_n = params.ln_n();
    let (lp, lq, lrho) = (params.p.ln(), params.q.ln(), params.rho.ln());
    let ln_fact: f64 = (1..=motif.ell).map(|k| (k as f64).ln()).sum();
    let ln_copies = compute_n(motif, params.n)
        .to_f64()
        .filter(|x| x.is_finite())
        .map(f64::ln)
        .unwrap_or_else(|| {
            ln_binomial(params.n, motif.ell as u64) + ln_fact - (motif.aut_count as f64).ln()
        });
    let ln_eq = ln_copies + m * lq;
    let ln_lambda = ln_copies + l * lrho + m * lp;
    let ln_var_q_a =
        2.0 * m.ln() + ln_copies + l * (1.0 - 1.0 / m) * ln_n + r * (m - 1.0) * l.ln() + (2.0 * m - 1.0) * lq;
    let ln_var_q_b = (m + 1.0) * m.ln() + ln_eq;
    let ln_var_q = ln_var_q_a.max(ln_var_q_b);
    let ln_var_p = l * 8f64.ln()
        + ln_copies
        + (l - 1.0) * ln_n
        + (1.0 + r * m) * l.ln()
        + (2.0 * l - 1.0) * lrho
        + (2.0 * m - m / l) * lp;
    MotifMoments {
        eq: ln_eq.exp(),
        lambda_lb: ln_lambda.exp(),
        var_q_bound: ln_var_q.exp(),
        var_p_bound: ln_var_p.exp(),
        ln_n_copies: ln_copies,
        ln_eq,
        ln_lambda_lb: ln_lambda,
        ln_var_q_bound: ln_var_q,
        ln_var_p_bound: ln_var_p,
        eq_is_exact: true,
        lambda_lb_is_bound: true,
        var_q_is_bound: true,
        var_p_is_bound: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn motif(n: u32, edges: &[&[u32]]) -> BalancedMotif {
        BalancedMotif::from_hypergraph(&Hypergraph::from_one_based(n, 2, edges).unwrap()).unwrap()
    }

    #[test]
    fn count_examples() {
        let h = Hypergraph::from_one_based(4, 2, &[&[1, 2], &[1, 3], &[2, 3], &[3, 4]]).unwrap();
        assert_eq!(count_motif(&h, &motif(3, &[&[1, 2], &[1, 3], &[2, 3]])), 1);
        assert_eq!(count_motif(&h, &motif(3, &[&[1, 2], &[2, 3]])), 5);
        assert_eq!(count_motif(&h, &motif(2, &[&[1, 2]])), 4);
    }

    #[test]
    fn copies_in_complete_graph() {
        let tri = motif(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(compute_n(&tri, 5), BigUint::from(10u32));
        assert_eq!(count_motif(&Hypergraph::complete(5, 2).unwrap(), &tri), 10);
        let edge = motif(2, &[&[1, 2]]);
        assert_eq!(compute_n(&edge, 5), BigUint::from(10u32));
        let path = motif(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(compute_n(&path, 4), BigUint::from(12u32));
        assert_eq!(count_motif(&Hypergraph::complete(4, 2).unwrap(), &path), 12);
    }

    #[test]
    fn tensor_and_hypergraph_agree() {
        let h = Hypergraph::from_one_based(5, 2, &[&[1, 2], &[1, 3], &[2, 3], &[3, 4], &[4, 5], &[3, 5]]).unwrap();
        let path = motif(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(count_motif(&h, &path), count_motif_tensor(&h.to_tensor(), &path));
    }

    #[test]
    fn triangle_null_mean() {
        // At q = 1/2 and n = 10 the expected triangle count is 120/8.
        let base = ProblemParams::new(4, 2, 0.25, 0.5, 0.5).unwrap();
        let params = ProblemParams { n: 10, m_total: 45.0, ..base };
        let tri = motif(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let mm = exact_moments_motif_stat(&params, &tri);
        assert!((mm.eq - 15.0).abs() < 1e-9, "{}", mm.eq);
    }
}
