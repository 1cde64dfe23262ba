use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{binomial_u64, Combinations};

/// Largest motif vertex count the search will try.
pub const MAX_MOTIF_VERTICES: u32 = 12;
/// Largest number of search nodes visited per `(ℓ, m)` attempt.
pub const MAX_SEARCH_NODES: u64 = 50_000_000;

const BRACKET_SCALE: u64 = 1_000_000_000;

/// Rational bracket `(lo, hi)` strictly inside `(1/β, γ/α)`, each endpoint
/// on the `1e-9` grid and rounded inward. The inputs are taken as their
/// exact binary values.
pub fn search_interval(alpha: f64, beta: f64, gamma: f64) -> Result<(BigRational, BigRational)> {
    let exact = |x: f64, name: &str| {
        BigRational::from_float(x).ok_or_else(|| invalid!("{name} is not finite"))
    };
    let (a, b, g) = (exact(alpha, "α")?, exact(beta, "β")?, exact(gamma, "γ")?);
    let scale = BigRational::from_integer(BigInt::from(BRACKET_SCALE));
    let lo_scaled = &scale / &b;
    let hi_scaled = &scale * &g / &a;
    let lo = BigRational::new(lo_scaled.floor().to_integer() + 1, BRACKET_SCALE.into());
    let hi = BigRational::new(hi_scaled.ceil().to_integer() - 1, BRACKET_SCALE.into());
    Ok((lo, hi))
}

/// The rational with the smallest denominator strictly inside `(lo, hi)`,
/// `0 <= lo < hi`; `hi = None` means unbounded. When several integers fit,
/// the smallest is returned.
pub fn simplest_between(lo: &BigRational, hi: Option<&BigRational>) -> BigRational {
    let f = lo.floor();
    let next = &f + BigRational::one();
    if hi.is_none_or(|h| &next < h) {
        return next;
    }
    let hi = hi.expect("bounded");
    let frac_lo = lo - &f;
    let upper = if frac_lo.is_zero() { None } else { Some(frac_lo.recip()) };
    let lower = (hi - &f).recip();
    f + simplest_between(&lower, upper.as_ref()).recip()
}

/// Lexicographically smallest set of edge ranks on `ell` vertices with `m`
/// edges, no isolated vertex, and no vertex subset denser than `m/ell`.
/// Returns the vertex bitmasks of the chosen edges.
pub(crate) fn canonical_balanced(ell: u32, m: u32, r: u32) -> Result<Option<Vec<u32>>> {
    let all: Vec<u32> = Combinations::new(ell, r)
        .map(|e| e.iter().fold(0u32, |mask, &v| mask | 1 << v))
        .collect();
    if m as usize > all.len() || m == 0 {
        return Ok(None);
    }
    let l = ell as usize;
    let mut after = vec![vec![0u32; l]; all.len() + 1];
    for i in (0..all.len()).rev() {
        after[i] = after[i + 1].clone();
        for (v, slot) in after[i].iter_mut().enumerate() {
            if all[i] >> v & 1 == 1 {
                *slot += 1;
            }
        }
    }
    let mut state = Search {
        ell,
        m,
        need: m.div_ceil(ell),
        all,
        after,
        counts: vec![0u32; 1 << l],
        deg: vec![0u32; l],
        chosen: Vec::with_capacity(m as usize),
        nodes: 0,
    };
    if state.dfs(0)? {
        Ok(Some(state.chosen))
    } else {
        Ok(None)
    }
}

struct Search {
    ell: u32,
    m: u32,
    need: u32,
    all: Vec<u32>,
    after: Vec<Vec<u32>>,
    counts: Vec<u32>,
    deg: Vec<u32>,
    chosen: Vec<u32>,
    nodes: u64,
}

impl Search {
    fn dfs(&mut self, i: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > MAX_SEARCH_NODES {
            return Err(Error::NotFound(format!(
                "motif search exceeded {MAX_SEARCH_NODES} nodes at (ℓ, m) = ({}, {})",
                self.ell, self.m
            )));
        }
        let have = self.chosen.len() as u32;
        if have == self.m {
            return Ok(self.deg.iter().all(|&d| d >= self.need));
        }
        if ((self.all.len() - i) as u32) < self.m - have {
            return Ok(false);
        }
        if self.deg.iter().zip(&self.after[i]).any(|(&d, &a)| d + a < self.need) {
            return Ok(false);
        }
        let e = self.all[i];
        if self.add(e) {
            self.chosen.push(e);
            if self.dfs(i + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        self.remove(e);
        self.dfs(i + 1)
    }

    /// Adds `e` to every superset count; reports whether all subsets stay
    /// within density `m/ell`. The caller always calls `remove` when the
    /// edge is not kept.
    fn add(&mut self, e: u32) -> bool {
        let full = (1u32 << self.ell) - 1;
        let rest = full & !e;
        let mut ok = true;
        let mut sub = rest;
        loop {
            let s = (e | sub) as usize;
            self.counts[s] += 1;
            if self.counts[s] as u64 * self.ell as u64 > self.m as u64 * s.count_ones() as u64 {
                ok = false;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        for v in 0..self.ell {
            if e >> v & 1 == 1 {
                self.deg[v as usize] += 1;
            }
        }
        ok
    }

    fn remove(&mut self, e: u32) {
        let full = (1u32 << self.ell) - 1;
        let rest = full & !e;
        let mut sub = rest;
        loop {
            self.counts[(e | sub) as usize] -= 1;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        for v in 0..self.ell {
            if e >> v & 1 == 1 {
                self.deg[v as usize] -= 1;
            }
        }
    }
}

/// Converts a target ratio to machine integers when small enough to search.
pub(crate) fn small_ratio(x: &BigRational) -> Option<Ratio<u64>> {
    let (n, d) = (x.numer().to_u64()?, x.denom().to_u64()?);
    Some(Ratio::new(n, d))
}

/// Candidate `(ℓ, m) = k·(den, num)` for `k = 1, 2, ...` within budget.
pub(crate) fn candidate_sizes(ratio: Ratio<u64>, r: u32) -> Vec<(u32, u32)> {
    let (num, den) = (*ratio.numer(), *ratio.denom());
    (1..)
        .map(|k| (k * den, k * num))
        .take_while(|&(l, _)| l <= MAX_MOTIF_VERTICES as u64)
        .filter(|&(l, m)| binomial_u64(l, r as u64).is_some_and(|c| m <= c))
        .map(|(l, m)| (l as u32, m as u32))
        .collect()
}

pub(crate) fn gcd_ratio(m: u64, l: u64) -> Ratio<u64> {
    let g = m.gcd(&l).max(1);
    Ratio::new_raw(m / g, l / g)
}
