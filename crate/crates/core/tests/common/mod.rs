//! Independent reference implementations used only by the integration
//! tests. Nothing here calls into the routines being checked.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// All `r`-subsets of `0..n` in lexicographic order, as vertex bitmasks.
pub fn all_edges(n: u32, r: u32) -> Vec<u32> {
    fn go(start: u32, n: u32, left: u32, acc: u32, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for v in start..n {
            go(v + 1, n, left - 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    go(0, n, r, 0, &mut out);
    out
}

pub fn vertices_of(mask: u32) -> Vec<u32> {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

pub fn union_mask(edges: &[u32]) -> u32 {
    edges.iter().fold(0, |a, &e| a | e)
}

/// Whether some bijection from the motif's vertices onto the vertices of
/// `host` maps the motif's edge set exactly onto `host`'s edge set. Plain
/// backtracking over vertex assignments.
pub fn isomorphic(motif: &[u32], host: &[u32]) -> bool {
    if motif.len() != host.len() {
        return false;
    }
    let mv = vertices_of(union_mask(motif));
    let hv = vertices_of(union_mask(host));
    if mv.len() != hv.len() {
        return false;
    }
    let host_set: BTreeSet<u32> = host.iter().copied().collect();
    let mut image = vec![u32::MAX; 32];
    let mut used = vec![false; hv.len()];
    fn go(
        i: usize,
        mv: &[u32],
        hv: &[u32],
        motif: &[u32],
        host: &BTreeSet<u32>,
        image: &mut [u32],
        used: &mut [bool],
    ) -> bool {
        if i == mv.len() {
            return motif.iter().all(|&e| {
                let mapped = vertices_of(e).iter().fold(0u32, |a, &v| a | 1 << image[v as usize]);
                host.contains(&mapped)
            });
        }
        for j in 0..hv.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            image[mv[i] as usize] = hv[j];
            if go(i + 1, mv, hv, motif, host, image, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    go(0, &mv, &hv, motif, &host_set, &mut image, &mut used)
}

/// Number of `|motif|`-edge subsets of `host` isomorphic to `motif`.
pub fn count_copies_by_subsets(host: &[u32], motif: &[u32]) -> u64 {
    let m = motif.len();
    let mut count = 0u64;
    let mut chosen = Vec::with_capacity(m);
    fn go(start: usize, host: &[u32], motif: &[u32], chosen: &mut Vec<u32>, count: &mut u64) {
        if chosen.len() == motif.len() {
            if isomorphic(motif, chosen) {
                *count += 1;
            }
            return;
        }
        for i in start..host.len() {
            chosen.push(host[i]);
            go(i + 1, host, motif, chosen, count);
            chosen.pop();
        }
    }
    go(0, host, motif, &mut chosen, &mut count);
    count
}

/// Balancedness by enumerating every nonempty edge subset.
pub fn balanced_by_subsets(edges: &[u32]) -> bool {
    let m = edges.len() as u64;
    let ell = union_mask(edges).count_ones() as u64;
    (1u32..1 << edges.len()).all(|sel| {
        let sub: Vec<u32> = (0..edges.len()).filter(|i| sel >> i & 1 == 1).map(|i| edges[i]).collect();
        let sm = sub.len() as u64;
        let sl = union_mask(&sub).count_ones() as u64;
        sm * ell <= m * sl
    })
}

/// The edges selected by `sel` from `pool`.
pub fn select(pool: &[u32], sel: u32) -> Vec<u32> {
    (0..pool.len()).filter(|i| sel >> i & 1 == 1).map(|i| pool[i]).collect()
}

/// 1-based vertex lists for building a `Hypergraph`.
pub fn one_based(edges: &[u32]) -> Vec<Vec<u32>> {
    edges.iter().map(|&e| vertices_of(e).iter().map(|v| v + 1).collect()).collect()
}
