//! Exact counts of edge-induced subgraph classes `S_{ℓ,m}`.

use num_bigint::{BigInt, BigUint, Sign};

use super::rank::binomial_big;

/// Number of m-edge sets on ℓ labeled vertices that leave no vertex
/// isolated, by inclusion-exclusion over the set of uncovered vertices:
/// `sum_j (-1)^j C(ℓ, j) C(C(ℓ - j, r), m)`.
pub fn count_isolated_free_edge_sets(ell: u32, m: u32, r: u32) -> BigUint {
    if r == 0 {
        return BigUint::ZERO;
    }
    if ell == 0 {
        // Only the empty edge set lives on zero vertices.
        return if m == 0 { 1u32.into() } else { BigUint::ZERO };
    }
    if ell < r {
        return BigUint::ZERO;
    }
    let mut acc = BigInt::ZERO;
    for j in 0..=ell {
        let slots = binomial_big((ell - j) as u64, r as u64);
        let slots = u64::try_from(&slots).expect("C(ℓ, r) fits in u64 for any feasible ℓ");
        let term = binomial_big(ell as u64, j as u64) * binomial_big(slots, m as u64);
        let term = BigInt::from_biguint(Sign::Plus, term);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint().expect("inclusion-exclusion count is nonnegative")
}

/// `|S_{ℓ,m}| = C(n, ℓ) * count_isolated_free_edge_sets(ℓ, m, r)`, the number
/// of edge subsets of `K_n^r` spanning exactly ℓ vertices with m edges.
pub fn count_subgraph_class(n: u64, ell: u32, m: u32, r: u32) -> BigUint {
    if ell as u64 > n {
        return BigUint::ZERO;
    }
    let inner = count_isolated_free_edge_sets(ell, m, r);
    if inner == BigUint::ZERO {
        return inner;
    }
    binomial_big(n, ell as u64) * inner
}
