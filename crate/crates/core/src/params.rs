//! Problem parameters in the log-density parameterization
//! `p = n^-α`, `q = n^-β`, `ρ = n^(γ-1)`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::hypergraph::binomial_u64;

/// The parameter tuple `(n, r, α, β, γ)` together with its derived
/// densities. Construction validates `0 < α < β < r - 1`, `0 < γ < 1`
/// and `n >= r >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProblemParams {
    pub n: u64,
    pub r: u32,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub p: f64,
    pub q: f64,
    pub rho: f64,
    pub sigma: f64,
    /// `M = C(n, r)` as a float; use [`ProblemParams::edge_slots`] for the
    /// exact value when it fits.
    pub m_total: f64,
}

impl ProblemParams {
    pub fn new(n: u64, r: u32, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        check_common(n, r, alpha, beta, gamma)?;
        if !(alpha < beta) {
            return Err(invalid!("constraint α < β violated (α = {alpha}, β = {beta})"));
        }
        let params = Self::derive(n, r, alpha, beta, gamma);
        if !(params.q < params.p && params.p < 1.0) {
            return Err(invalid!(
                "derived densities violate 0 < q < p < 1 (p = {}, q = {})",
                params.p,
                params.q
            ));
        }
        Ok(params)
    }

    /// Validation used by the rank-one-spike model, which does not require
    /// `α < β`.
    pub fn relaxed(n: u64, r: u32, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        check_common(n, r, alpha, beta, gamma)?;
        Ok(Self::derive(n, r, alpha, beta, gamma))
    }

    fn derive(n: u64, r: u32, alpha: f64, beta: f64, gamma: f64) -> Self {
        let ln_n = (n as f64).ln();
        let p = (-alpha * ln_n).exp();
        let q = (-beta * ln_n).exp();
        let rho = ((gamma - 1.0) * ln_n).exp();
        let m_total = match binomial_u64(n, r as u64) {
            Some(m) => m as f64,
            None => ln_binomial(n, r as u64).exp(),
        };
        ProblemParams {
            n,
            r,
            alpha,
            beta,
            gamma,
            p,
            q,
            rho,
            sigma: (q * (1.0 - q)).sqrt(),
            m_total,
        }
    }

    /// Overrides the planted density. Only for degenerate-model checks such
    /// as forcing `p = q`.
    #[doc(hidden)]
    pub fn with_forced_p(mut self, p: f64) -> Self {
        self.p = p;
        self
    }

    /// Exact `M = C(n, r)`.
    pub fn edge_slots(&self) -> Result<u64> {
        crate::hypergraph::edge_count(self.n, self.r)
    }

    pub fn n_u32(&self) -> Result<u32> {
        u32::try_from(self.n).map_err(|_| invalid!("n = {} too large for sampling", self.n))
    }

    pub fn ln_n(&self) -> f64 {
        (self.n as f64).ln()
    }
}

fn check_common(n: u64, r: u32, alpha: f64, beta: f64, gamma: f64) -> Result<()> {
    if r < 2 {
        return Err(invalid!("constraint r >= 2 violated (r = {r})"));
    }
    if n < r as u64 {
        return Err(invalid!("constraint n >= r violated (n = {n}, r = {r})"));
    }
    if !(alpha > 0.0) {
        return Err(invalid!("constraint α > 0 violated (α = {alpha})"));
    }
    if !(beta > 0.0 && beta < (r - 1) as f64) {
        return Err(invalid!("constraint 0 < β < r - 1 violated (β = {beta}, r = {r})"));
    }
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(invalid!("constraint 0 < γ < 1 violated (γ = {gamma})"));
    }
    Ok(())
}

/// `ln C(n, k)` in double precision.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}

/// The densities `p`, `q`, `ρ` taken as exact rationals (the exact binary
/// value of each double), for oracles that must be free of rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactParams {
    pub n: u32,
    pub r: u32,
    pub p: BigRational,
    pub q: BigRational,
    pub rho: BigRational,
}

impl ExactParams {
    pub fn from_params(params: &ProblemParams) -> Result<Self> {
        let conv = |x: f64, name: &str| {
            BigRational::from_float(x).ok_or_else(|| invalid!("{name} is not finite"))
        };
        Ok(ExactParams {
            n: params.n_u32()?,
            r: params.r,
            p: conv(params.p, "p")?,
            q: conv(params.q, "q")?,
            rho: conv(params.rho, "ρ")?,
        })
    }

    /// The same parameters with the planted density collapsed onto `q`,
    /// which turns the planted model into the null product measure.
    pub fn null_collapse(&self) -> Self {
        ExactParams {
            p: self.q.clone(),
            ..self.clone()
        }
    }

    /// `σ² = q(1 - q)`.
    pub fn sigma_sq(&self) -> BigRational {
        &self.q * (BigRational::one() - &self.q)
    }

    pub fn is_degenerate(&self) -> bool {
        self.sigma_sq().is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_examples() {
        let a = ProblemParams::new(16, 2, 0.25, 0.5, 0.5).unwrap();
        assert!((a.p - 0.5).abs() < 1e-15);
        assert!((a.q - 0.25).abs() < 1e-15);
        assert!((a.rho - 0.25).abs() < 1e-15);
        assert!((a.sigma - 0.1875f64.sqrt()).abs() < 1e-15);
        assert_eq!(a.m_total, 120.0);

        let b = ProblemParams::new(4, 2, 0.25, 0.5, 0.5).unwrap();
        assert!((b.p - 0.707_106_781_186_547_5).abs() < 1e-15);
        assert!((b.q - 0.5).abs() < 1e-15);
        assert!((b.rho - 0.5).abs() < 1e-15);
        assert!((b.sigma - 0.5).abs() < 1e-15);
        assert_eq!(b.m_total, 6.0);
    }

    #[test]
    fn constraint_violations_are_named() {
        let err = ProblemParams::new(16, 2, 0.6, 0.5, 0.5).unwrap_err();
        assert!(err.to_string().contains("α < β"), "{err}");
        assert!(ProblemParams::new(16, 2, 0.2, 1.0, 0.5).unwrap_err().to_string().contains("β"));
        assert!(ProblemParams::new(16, 2, 0.2, 0.5, 1.0).unwrap_err().to_string().contains("γ"));
        assert!(ProblemParams::new(1, 2, 0.2, 0.5, 0.5).is_err());
        assert!(ProblemParams::new(16, 1, 0.2, 0.5, 0.5).is_err());
        assert!(ProblemParams::new(16, 2, 0.0, 0.5, 0.5).is_err());
        assert!(ProblemParams::new(16, 2, f64::NAN, 0.5, 0.5).is_err());
        // The relaxed form admits α > β.
        assert!(ProblemParams::relaxed(16, 2, 0.6, 0.5, 0.5).is_ok());
    }

    #[test]
    fn huge_n_is_representable() {
        let p = ProblemParams::new(1_000_000_000, 3, 0.5, 1.0, 0.4).unwrap();
        assert!(p.m_total > 1.6e26 && p.m_total < 1.7e26);
        assert!(p.edge_slots().is_err());
        assert!(p.q > 0.0 && p.q < p.p);
    }

    #[test]
    fn exact_params_are_exact_copies() {
        let params = ProblemParams::new(4, 2, 0.25, 0.5, 0.5).unwrap();
        let ex = ExactParams::from_params(&params).unwrap();
        assert_eq!(ex.q, BigRational::new(1.into(), 2.into()));
        assert_eq!(ex.sigma_sq(), BigRational::new(1.into(), 4.into()));
        assert_eq!(ex.null_collapse().p, ex.q);
    }
}
