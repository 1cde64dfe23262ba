//! Exhaustive enumeration of the planted model on tiny instances, with
//! exact rational probabilities.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{AdjacencyTensor, Combinations};
use crate::params::{ExactParams, ProblemParams};

/// Largest `log2(2^n · 2^M)` the enumerator accepts.
pub const EXACT_BUDGET_LOG2: u32 = 26;

/// One outcome `(Z, Y)`; `Z` and `Y` are stored as bitmasks over vertices
/// and ranked edges.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub z_mask: u32,
    pub y_mask: u64,
    pub prob: BigRational,
}

impl Outcome {
    pub fn planted(&self) -> BTreeSet<u32> {
        (0..32).filter(|v| self.z_mask >> v & 1 == 1).collect()
    }

    pub fn edge_present(&self, index: u64) -> bool {
        self.y_mask >> index & 1 == 1
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactDistribution {
    pub n: u32,
    pub r: u32,
    /// Vertex bitmask of every ranked edge.
    pub edge_masks: Vec<u32>,
    pub outcomes: Vec<Outcome>,
}

impl ExactDistribution {
    pub fn total_mass(&self) -> BigRational {
        self.outcomes.iter().map(|o| &o.prob).sum()
    }

    /// `E[f(Z, Y)]`.
    pub fn expectation<F>(&self, mut f: F) -> BigRational
    where
        F: FnMut(&Outcome) -> BigRational,
    {
        let mut acc = BigRational::zero();
        for o in &self.outcomes {
            let v = f(o);
            if !v.is_zero() {
                acc += &o.prob * v;
            }
        }
        acc
    }

    pub fn tensor(&self, o: &Outcome) -> AdjacencyTensor {
        let mut y = AdjacencyTensor::empty(self.n, self.r).expect("tiny tensor");
        for i in 0..self.edge_masks.len() as u64 {
            if o.edge_present(i) {
                y.set(i, true);
            }
        }
        y
    }
}

pub fn enumerate_planted_exact(params: &ProblemParams) -> Result<ExactDistribution> {
    enumerate_planted_exact_with(&ExactParams::from_params(params)?)
}

/// Enumerates all `(Z, Y)` under the planted model with the given exact
/// densities. With `p = q` this is the null product measure.
pub fn enumerate_planted_exact_with(ex: &ExactParams) -> Result<ExactDistribution> {
    let edge_masks: Vec<u32> = if ex.n <= 26 {
        Combinations::new(ex.n, ex.r)
            .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
            .collect()
    } else {
        Vec::new()
    };
    let m = edge_masks.len() as u32;
    if ex.n > 26 || ex.n + m > EXACT_BUDGET_LOG2 {
        return Err(Error::TooLarge(format!(
            "exact enumeration needs 2^n · 2^M <= 2^{EXACT_BUDGET_LOG2} (n = {}, r = {})",
            ex.n, ex.r
        )));
    }
    let pows = |x: &BigRational, k: u32| {
        let mut out = vec![BigRational::one()];
        for i in 0..k as usize {
            out.push(&out[i] * x);
        }
        out
    };
    let one = BigRational::one();
    let (rho_p, rho_c) = (pows(&ex.rho, ex.n), pows(&(&one - &ex.rho), ex.n));
    let (p_p, p_c) = (pows(&ex.p, m), pows(&(&one - &ex.p), m));
    let (q_p, q_c) = (pows(&ex.q, m), pows(&(&one - &ex.q), m));

    let mut outcomes = Vec::with_capacity(1usize << (ex.n + m));
    for z in 0u32..1 << ex.n {
        let size = z.count_ones();
        let pz = &rho_p[size as usize] * &rho_c[(ex.n - size) as usize];
        let inside: u64 = edge_masks
            .iter()
            .enumerate()
            .filter(|(_, &em)| em & z == em)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        let k_in = inside.count_ones();
        let k_out = m - k_in;
        for y in 0u64..1 << m {
            let a = (y & inside).count_ones();
            let b = (y & !inside).count_ones();
            let prob = &pz
                * &p_p[a as usize]
                * &p_c[(k_in - a) as usize]
                * &q_p[b as usize]
                * &q_c[(k_out - b) as usize];
            outcomes.push(Outcome { z_mask: z, y_mask: y, prob });
        }
    }
    Ok(ExactDistribution {
        n: ex.n,
        r: ex.r,
        edge_masks,
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> ProblemParams {
        ProblemParams::new(3, 2, 0.25, 0.5, 0.5).unwrap()
    }

    #[test]
    fn normalized_and_sized() {
        let d = enumerate_planted_exact(&params()).unwrap();
        assert_eq!(d.outcomes.len(), 64);
        assert!(d.total_mass().is_one());
    }

    #[test]
    fn edge_marginal_matches_closed_form() {
        let ex = ExactParams::from_params(&params()).unwrap();
        let d = enumerate_planted_exact_with(&ex).unwrap();
        let rho_r = &ex.rho * &ex.rho;
        let want = &rho_r * &ex.p + (BigRational::one() - &rho_r) * &ex.q;
        for e in 0..3 {
            let got = d.expectation(|o| {
                if o.edge_present(e) {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            });
            assert_eq!(got, want);
        }
    }

    #[test]
    fn collapse_is_product_measure() {
        let ex = ExactParams::from_params(&params()).unwrap().null_collapse();
        let d = enumerate_planted_exact_with(&ex).unwrap();
        let one = BigRational::one();
        for y in 0u64..8 {
            let mass = d.expectation(|o| if o.y_mask == y { one.clone() } else { BigRational::zero() });
            let k = y.count_ones() as usize;
            let mut want = one.clone();
            for i in 0..3 {
                want *= if i < k { ex.q.clone() } else { &one - &ex.q };
            }
            assert_eq!(mass, want);
        }
    }

    #[test]
    fn budget() {
        let big = ProblemParams::new(8, 2, 0.25, 0.5, 0.5).unwrap();
        assert!(matches!(enumerate_planted_exact(&big), Err(Error::TooLarge(_))));
    }
}
