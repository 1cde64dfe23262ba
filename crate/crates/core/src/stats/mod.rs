//! Detection statistics, their moments, threshold tests, Monte Carlo
//! separation estimates, and the regime classifier.

mod edge;
mod motif;
mod regime;
mod separation;

use serde::Serialize;

use crate::balanced::BalancedMotif;
use crate::error::Result;
use crate::hypergraph::AdjacencyTensor;
use crate::params::ProblemParams;

pub use edge::{exact_moments_edge_stat, signed_edge_count, EdgeMoments, StandardizedEdge};
pub use motif::{
    compute_n, count_motif, count_motif_tensor, exact_moments_motif_stat, MotifCounter,
    MotifMoments,
};
pub use regime::{classify_regime, regime_threshold, Regime, BOUNDARY_TOLERANCE};
pub use separation::{
    estimate_separation, estimate_separation_with_trials, summarize, Model, SampleSummary,
    SeparationReport, TrialRecord,
};

/// Which statistic a test uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statistic {
    /// The signed hyperedge count `T̃`.
    Edge,
    /// The number of copies `T` of a balanced motif.
    Motif(BalancedMotif),
}

impl Statistic {
    pub fn name(&self) -> &'static str {
        match self {
            Statistic::Edge => "edge",
            Statistic::Motif(_) => "motif",
        }
    }

    /// Analytic means `(E_Q, E_P or its lower bound)` used to place the
    /// threshold.
    pub fn reference_means(&self, params: &ProblemParams) -> (f64, f64) {
        match self {
            Statistic::Edge => {
                let m = exact_moments_edge_stat(params);
                (m.eq, m.ep)
            }
            Statistic::Motif(motif) => {
                let m = exact_moments_motif_stat(params, motif);
                (m.eq, m.lambda_lb)
            }
        }
    }

    /// Midpoint of the two reference means.
    pub fn threshold(&self, params: &ProblemParams) -> f64 {
        let (a, b) = self.reference_means(params);
        0.5 * (a + b)
    }

    /// Statistic value on one observation.
    pub fn evaluate(&self, y: &AdjacencyTensor, params: &ProblemParams) -> Result<f64> {
        match self {
            Statistic::Edge => signed_edge_count(y, params),
            Statistic::Motif(motif) => {
                edge::check_shape(y, params)?;
                Ok(count_motif_tensor(y, motif) as f64)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Null,
    Planted,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Null => "null",
            Decision::Planted => "planted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TestOutcome {
    pub decision: Decision,
    pub statistic: f64,
    pub threshold: f64,
}

/// Declares "planted" iff the statistic exceeds the midpoint threshold.
pub fn threshold_test(
    y: &AdjacencyTensor,
    params: &ProblemParams,
    statistic: &Statistic,
) -> Result<TestOutcome> {
    let value = statistic.evaluate(y, params)?;
    let threshold = statistic.threshold(params);
    Ok(TestOutcome {
        decision: decide(value, threshold),
        statistic: value,
        threshold,
    })
}

pub(crate) fn decide(value: f64, threshold: f64) -> Decision {
    if value > threshold {
        Decision::Planted
    } else {
        Decision::Null
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;

    #[test]
    fn extreme_graphs() {
        let params = ProblemParams::new(4, 2, 0.25, 0.5, 0.5).unwrap();
        let empty = AdjacencyTensor::empty(4, 2).unwrap();
        let full = Hypergraph::complete(4, 2).unwrap().to_tensor();
        let a = threshold_test(&empty, &params, &Statistic::Edge).unwrap();
        assert_eq!(a.decision, Decision::Null);
        let b = threshold_test(&full, &params, &Statistic::Edge).unwrap();
        assert_eq!(b.decision, Decision::Planted);
        assert!((a.threshold - 0.310_660_171_779_821_2).abs() < 1e-12);
    }
}
