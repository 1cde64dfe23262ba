//! Lexicographic ranking of r-subsets of `0..n`.

use num_bigint::BigUint;

use super::Hyperedge;
use crate::error::{invalid, Result};

/// `C(n, k)` in 64-bit arithmetic, or `None` on overflow.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `C(n, k)` as an arbitrary-precision integer.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of hyperedges `M = C(n, r)`, failing when it does not fit in `u64`.
pub fn edge_count(n: u64, r: u32) -> Result<u64> {
    binomial_u64(n, r as u64)
        .ok_or_else(|| invalid!("C({n}, {r}) does not fit in 64 bits"))
}

/// Rank of a canonical hyperedge among all r-subsets of `0..n`, in
/// lexicographic order of the sorted vertex tuples.
pub fn rank_edge(edge: &Hyperedge, n: u64, r: u32) -> Result<u64> {
    let vs = edge.vertices();
    if vs.len() != r as usize {
        return Err(invalid!("edge has {} vertices, expected {r}", vs.len()));
    }
    if let Some(&last) = vs.last() {
        if last as u64 >= n {
            return Err(invalid!("vertex {} out of range for n = {n}", last + 1));
        }
    }
    if vs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid!("edge vertices must be strictly increasing"));
    }
    let total = edge_count(n, r)?;
    Ok(rank_sorted(vs, n, total))
}

/// Rank of an already validated strictly increasing tuple.
///
/// Uses `rank = M - 1 - sum_i C(n - 1 - c_i, r - i)`.
pub(crate) fn rank_sorted(vs: &[u32], n: u64, total: u64) -> u64 {
    let r = vs.len() as u64;
    let mut tail = 0u64;
    for (i, &c) in vs.iter().enumerate() {
        tail += binomial_u64(n - 1 - c as u64, r - i as u64).unwrap_or(0);
    }
    total - 1 - tail
}

/// Inverse of [`rank_edge`].
pub fn unrank_edge(index: u64, n: u64, r: u32) -> Result<Hyperedge> {
    let total = edge_count(n, r)?;
    if index >= total {
        return Err(invalid!("edge index {index} out of range [0, {total})"));
    }
    let mut x = total - 1 - index;
    let mut out = Vec::with_capacity(r as usize);
    // Upper limit (exclusive) for t = n - 1 - c_i.
    let mut limit = n;
    for i in 0..r as u64 {
        let k = r as u64 - i;
        // Largest t < limit with C(t, k) <= x.
        let (mut lo, mut hi) = (k - 1, limit - 1);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            match binomial_u64(mid, k) {
                Some(b) if b <= x => lo = mid,
                _ => hi = mid - 1,
            }
        }
        x -= binomial_u64(lo, k).unwrap_or(0);
        out.push((n - 1 - lo) as u32);
        limit = lo;
    }
    Ok(Hyperedge::from_sorted_unchecked(out))
}

/// Iterates all r-subsets of `0..n` in lexicographic (= rank) order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: u32,
    current: Vec<u32>,
    done: bool,
}

impl Combinations {
    pub fn new(n: u32, r: u32) -> Self {
        Combinations {
            n,
            current: (0..r).collect(),
            done: r > n,
        }
    }

    /// Current tuple, or `None` once exhausted. Use with [`Self::advance`]
    /// to walk without allocating.
    pub fn peek(&self) -> Option<&[u32]> {
        if self.done {
            None
        } else {
            Some(&self.current)
        }
    }

    pub fn advance(&mut self) {
        let r = self.current.len();
        let n = self.n as usize;
        let mut i = r;
        while i > 0 {
            i -= 1;
            if (self.current[i] as usize) < n - r + i {
                self.current[i] += 1;
                for j in i + 1..r {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Combinations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.peek()?.to_vec();
        self.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(vs: &[u32]) -> Hyperedge {
        Hyperedge::from_one_based(vs).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_edge(&e(&[1, 2]), 5, 2).unwrap(), 0);
        assert_eq!(rank_edge(&e(&[2, 3]), 5, 2).unwrap(), 4);
        assert_eq!(rank_edge(&e(&[4, 5]), 5, 2).unwrap(), 9);
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(unrank_edge(0, 5, 2).unwrap(), e(&[1, 2]));
        assert_eq!(unrank_edge(4, 5, 2).unwrap(), e(&[2, 3]));
        assert_eq!(unrank_edge(3, 4, 3).unwrap(), e(&[2, 3, 4]));
    }

    #[test]
    fn rank_rejects_bad_edges() {
        assert!(rank_edge(&e(&[1, 6]), 5, 2).is_err());
        assert!(rank_edge(&e(&[1, 2, 3]), 5, 2).is_err());
        let unsorted = Hyperedge::from_sorted_unchecked(vec![2, 1]);
        assert!(rank_edge(&unsorted, 5, 2).is_err());
        assert!(unrank_edge(10, 5, 2).is_err());
    }

    #[test]
    fn rank_unrank_exhaustive() {
        for r in 2..=3u32 {
            for n in r as u64..=8 {
                let total = edge_count(n, r).unwrap();
                let mut combos = Combinations::new(n as u32, r);
                for idx in 0..total {
                    let edge = unrank_edge(idx, n, r).unwrap();
                    assert_eq!(rank_edge(&edge, n, r).unwrap(), idx);
                    // Lexicographic enumeration agrees with the ranking.
                    assert_eq!(combos.next().unwrap(), edge.vertices());
                }
                assert!(combos.next().is_none());
            }
        }
    }

    #[test]
    fn large_n_rank() {
        let n = 1_000_000u64;
        let edge = Hyperedge::new(vec![999_998, 999_999]).unwrap();
        let idx = rank_edge(&edge, n, 2).unwrap();
        assert_eq!(idx, edge_count(n, 2).unwrap() - 1);
        assert_eq!(unrank_edge(idx, n, 2).unwrap(), edge);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_u64(5, 2), Some(10));
        assert_eq!(binomial_u64(3, 5), Some(0));
        assert_eq!(binomial_big(190, 10).to_string(), "13278694407181203");
        assert_eq!(binomial_u64(200, 100), None);
    }
}
