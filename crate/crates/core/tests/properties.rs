mod common;

use proptest::prelude::*;

use common::{all_edges, count_copies_by_subsets, one_based, select};
use plantlab_core::balanced::BalancedMotif;
use plantlab_core::hypergraph::{edge_count, rank_edge, text, unrank_edge, Hypergraph};
use plantlab_core::ldlr::{ldlr_norm_bruteforce, ldlr_norm_exact};
use plantlab_core::stats::{count_motif, estimate_separation, Statistic};
use plantlab_core::ProblemParams;

fn hypergraph(n: u32, r: u32, edges: &[u32]) -> Hypergraph {
    let lists = one_based(edges);
    let refs: Vec<&[u32]> = lists.iter().map(Vec::as_slice).collect();
    Hypergraph::from_one_based(n, r, &refs).unwrap()
}

/// A random host on `n` vertices with at most 12 edges, as masks.
fn host() -> impl Strategy<Value = (u32, u32, Vec<u32>)> {
    (prop_oneof![Just(2u32), Just(3u32)], 4u32..=7).prop_flat_map(|(r, n)| {
        let pool = all_edges(n, r);
        let len = pool.len();
        (Just(r), Just(n), proptest::sample::subsequence(pool, 0..=12.min(len)))
    })
}

/// Every balanced edge set with at most four edges on `0..5`.
fn balanced_motifs(r: u32) -> Vec<BalancedMotif> {
    let pool = all_edges(5, r);
    (1u32..1 << pool.len())
        .filter(|s| s.count_ones() <= 4)
        .filter_map(|s| BalancedMotif::from_hypergraph(&hypergraph(5, r, &select(&pool, s))).ok())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_round_trip(n in 3u64..2_000_000, r in 2u32..=3, seed in any::<u64>()) {
        let total = edge_count(n, r).unwrap();
        let index = seed % total;
        let edge = unrank_edge(index, n, r).unwrap();
        prop_assert_eq!(rank_edge(&edge, n, r).unwrap(), index);
        prop_assert!(edge.vertices().windows(2).all(|w| w[0] < w[1]));
        prop_assert!((*edge.vertices().last().unwrap() as u64) < n);
    }

    #[test]
    fn motif_count_matches_subset_counter(
        (r, n, edges) in host(),
        pick in any::<proptest::sample::Index>(),
    ) {
        let motif = pick.get(&balanced_motifs(r)).clone();
        let h = hypergraph(n, r, &edges);
        prop_assert_eq!(count_motif(&h, &motif), count_copies_by_subsets(&edges, &motif.edge_masks()));
    }

    #[test]
    fn motif_count_ignores_vertex_labels(
        (r, n, edges) in host(),
        pick in any::<proptest::sample::Index>(),
        perm_seed in any::<u64>(),
    ) {
        let motif = pick.get(&balanced_motifs(r)).clone();
        let h = hypergraph(n, r, &edges);
        let mut perm: Vec<u32> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let relabeled = h.relabeled(&perm).unwrap();
        prop_assert_eq!(count_motif(&h, &motif), count_motif(&relabeled, &motif));
    }

    #[test]
    fn text_format_round_trips((r, n, edges) in host()) {
        let h = hypergraph(n, r, &edges);
        let doc = text::parse(&text::write(&h, &[("note", "x".to_string())])).unwrap();
        prop_assert_eq!(doc.header("note"), Some("x"));
        prop_assert_eq!(doc.hypergraph, h);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ldlr_norm_is_nondecreasing_in_degree(
        ln_n in 2.0f64..20.0,
        r in 2u32..=3,
        alpha in 0.05f64..0.9,
        gap in 0.05f64..0.9,
        gamma in 0.05f64..0.95,
    ) {
        let n = ln_n.exp().round() as u64;
        let Ok(params) = ProblemParams::new(n, r, alpha, alpha + gap, gamma) else {
            return Ok(());
        };
        let mut prev = 1.0f64;
        for d in 0..=6 {
            let v = ldlr_norm_exact(&params, d).unwrap();
            prop_assert!(v.value >= prev * (1.0 - 1e-12), "D={} {} < {}", d, v.value, prev);
            prev = v.value;
        }
    }

    #[test]
    fn closed_form_matches_brute_force_at_tiny_n(
        n in 3u64..=5,
        r in 2u32..=3,
        alpha in 0.05f64..0.9,
        gap in 0.05f64..0.9,
        gamma in 0.05f64..0.95,
        d in 0u32..=3,
    ) {
        prop_assume!(n as u32 >= r);
        let Ok(params) = ProblemParams::new(n, r, alpha, alpha + gap, gamma) else {
            return Ok(());
        };
        let exact = ldlr_norm_exact(&params, d).unwrap().value;
        let brute = ldlr_norm_bruteforce(&params, d).unwrap().value;
        prop_assert!((exact - brute).abs() <= 1e-9 * brute, "{} vs {}", exact, brute);
    }
}

#[test]
fn separation_is_independent_of_worker_count() {
    let params = ProblemParams::new(24, 2, 0.3, 0.6, 0.7).unwrap();
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| estimate_separation(&params, &Statistic::Edge, 64, 9).unwrap())
    };
    let one = run(1);
    for threads in [2, 5] {
        let other = run(threads);
        assert_eq!(one, other);
        assert_eq!(one.records, other.records);
    }
}
