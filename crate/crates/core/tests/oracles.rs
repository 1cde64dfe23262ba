mod common;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use common::{all_edges, balanced_by_subsets, isomorphic, one_based, select, union_mask};
use plantlab_core::balanced::{is_balanced, BalancedMotif};
use plantlab_core::hypergraph::Hypergraph;
use plantlab_core::models::enumerate_planted_exact;
use plantlab_core::stats::{compute_n, count_motif};
use plantlab_core::ProblemParams;

fn hypergraph(n: u32, r: u32, edges: &[u32]) -> Hypergraph {
    let lists = one_based(edges);
    let refs: Vec<&[u32]> = lists.iter().map(Vec::as_slice).collect();
    Hypergraph::from_one_based(n, r, &refs).unwrap()
}

#[test]
fn balancedness_matches_subset_enumeration_on_five_vertices() {
    for r in [2, 3] {
        let pool = all_edges(5, r);
        let mut balanced = 0;
        for sel in 1u32..1 << pool.len() {
            let edges = select(&pool, sel);
            let (fast, cert) = is_balanced(&hypergraph(5, r, &edges)).unwrap();
            assert_eq!(fast, balanced_by_subsets(&edges), "r={r} edges={edges:?}");
            // The witness attains the reported maximum density.
            let w = cert.witness.iter().fold(0u32, |a, &v| a | 1 << v);
            let inside = edges.iter().filter(|&&e| e & !w == 0).count() as u64;
            assert_eq!(cert.max_density, num_rational::Ratio::new(inside, w.count_ones() as u64));
            balanced += fast as u32;
        }
        assert!(balanced > 0);
    }
}

#[test]
fn copies_in_complete_hypergraph_match_closed_form() {
    // Every balanced motif with at most three edges on at most five vertices.
    for r in [2, 3] {
        let pool = all_edges(5, r);
        let mut seen: Vec<Vec<u32>> = Vec::new();
        for sel in 1u32..1 << pool.len() {
            if sel.count_ones() > 3 {
                continue;
            }
            let edges = select(&pool, sel);
            if seen.iter().any(|s| isomorphic(s, &edges)) {
                continue;
            }
            seen.push(edges.clone());
            let Ok(motif) = BalancedMotif::from_hypergraph(&hypergraph(5, r, &edges)) else {
                continue;
            };
            for n in motif.ell..=7 {
                let complete = Hypergraph::complete(n, r).unwrap();
                assert_eq!(
                    BigUint::from(count_motif(&complete, &motif)),
                    compute_n(&motif, n as u64),
                    "r={r} n={n} motif={edges:?}"
                );
            }
        }
        assert!(seen.len() >= 4);
    }
}

fn pow(x: &BigRational, k: u32) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * x)
}

/// `E_P[∏_{e ∈ S1 ∪ S2} Y_e] <= 4^ℓ ρ^{|V(S1 ∪ S2)|} p^{|S1 ∪ S2|}` for
/// every pair of copies of a two-edge motif in the complete hypergraph on
/// four vertices, computed exactly over the planted distribution.
fn check_union_bound(params: &ProblemParams) {
    let dist = enumerate_planted_exact(params).unwrap();
    let r = params.r;
    let rho = BigRational::from_float(params.rho).unwrap();
    let p = BigRational::from_float(params.p).unwrap();
    let pool = dist.edge_masks.clone();
    let mut motifs_checked = 0;
    let mut motifs: Vec<Vec<u32>> = Vec::new();
    for sel in 1u32..1 << pool.len() {
        if sel.count_ones() != 2 {
            continue;
        }
        let edges = select(&pool, sel);
        if motifs.iter().any(|m| isomorphic(m, &edges)) {
            continue;
        }
        motifs.push(edges);
    }
    for motif in &motifs {
        let ell = union_mask(motif).count_ones();
        let copies: Vec<Vec<usize>> = (1u32..1 << pool.len())
            .filter(|s| s.count_ones() == 2)
            .map(|s| (0..pool.len()).filter(|i| s >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|idx| {
                let e: Vec<u32> = idx.iter().map(|&i| pool[i]).collect();
                isomorphic(motif, &e)
            })
            .collect();
        assert!(!copies.is_empty());
        for s1 in &copies {
            for s2 in &copies {
                let mut union: Vec<usize> = s1.iter().chain(s2).copied().collect();
                union.sort_unstable();
                union.dedup();
                let lhs = dist.expectation(|o| {
                    if union.iter().all(|&i| o.edge_present(i as u64)) {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                });
                let verts = union.iter().fold(0u32, |a, &i| a | pool[i]).count_ones();
                let rhs = BigRational::from_integer((1u64 << (2 * ell)).into())
                    * pow(&rho, verts)
                    * pow(&p, union.len() as u32);
                assert!(lhs <= rhs, "r={r} motif={motif:?} s1={s1:?} s2={s2:?}");
            }
        }
        motifs_checked += 1;
    }
    assert!(motifs_checked >= 1);
}

#[test]
fn union_moment_bound_two_edge_motifs_graphs() {
    check_union_bound(&ProblemParams::new(4, 2, 0.05, 0.95, 0.45).unwrap());
}

#[test]
fn union_moment_bound_two_edge_motifs_three_uniform() {
    check_union_bound(&ProblemParams::new(4, 3, 0.05, 1.9, 0.45).unwrap());
}

#[test]
fn exact_marginals_match_closed_form() {
    for (r, n) in [(2, 4), (3, 4)] {
        let params = ProblemParams::new(n, r, 0.3, 0.7, 0.6).unwrap();
        let dist = enumerate_planted_exact(&params).unwrap();
        assert_eq!(dist.total_mass(), BigRational::one());
        let rho = BigRational::from_float(params.rho).unwrap();
        let p = BigRational::from_float(params.p).unwrap();
        let q = BigRational::from_float(params.q).unwrap();
        let inside = pow(&rho, r);
        let expected = &inside * &p + (BigRational::one() - &inside) * &q;
        for i in 0..dist.edge_masks.len() as u64 {
            let got = dist.expectation(|o| {
                if o.edge_present(i) {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            });
            assert_eq!(got, expected, "r={r} edge={i}");
        }
    }
}
