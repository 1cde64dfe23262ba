use serde::Serialize;

use super::{decide, Decision, Statistic};
use crate::error::{invalid, Result};
use crate::models::{sample_null_with, sample_planted_with};
use crate::params::ProblemParams;
use crate::parallel::try_map_indexed;
use crate::rng::StreamKey;

/// Largest number of batches used for batch-means standard errors.
pub const MAX_BATCHES: u64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Null,
    Planted,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::Null => "null",
            Model::Planted => "planted",
        }
    }

    pub(crate) fn stream(self) -> u64 {
        match self {
            Model::Null => 0,
            Model::Planted => 1,
        }
    }
}

/// One Monte Carlo draw, as written to the per-trial CSV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub model: Model,
    pub statistic: f64,
    pub decision: Decision,
}

/// Sample mean and variance with standard errors. The mean's error is
/// `sd/sqrt(t)`; the variance's error comes from batch means.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleSummary {
    pub mean: f64,
    pub mean_se: f64,
    pub variance: f64,
    pub variance_se: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparationReport {
    pub statistic: String,
    pub trials: u64,
    pub seed: u64,
    pub threshold: f64,
    pub mean_null: f64,
    pub mean_null_se: f64,
    pub mean_planted: f64,
    pub mean_planted_se: f64,
    pub var_null: f64,
    pub var_null_se: f64,
    pub var_planted: f64,
    pub var_planted_se: f64,
    /// `|mean_planted - mean_null| / sqrt(max(var_planted, var_null))`.
    pub separation: f64,
    pub separation_se: f64,
    pub type_one_error: f64,
    pub type_two_error: f64,
    #[serde(skip)]
    pub records: Vec<TrialRecord>,
}

fn moments(xs: &[f64]) -> (f64, f64) {
    let t = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / t;
    let var = if xs.len() < 2 {
        0.0
    } else {
        xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (t - 1.0)
    };
    (mean, var)
}

fn batches(len: usize) -> Vec<std::ops::Range<usize>> {
    let b = (MAX_BATCHES as usize).min(len / 2).max(1);
    (0..b).map(|i| i * len / b..(i + 1) * len / b).collect()
}

fn batch_se(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let (_, v) = moments(values);
    (v / values.len() as f64).sqrt()
}

pub fn summarize(xs: &[f64]) -> SampleSummary {
    let (mean, variance) = moments(xs);
    let batch_vars: Vec<f64> = batches(xs.len()).into_iter().map(|r| moments(&xs[r]).1).collect();
    SampleSummary {
        mean,
        mean_se: (variance / xs.len() as f64).sqrt(),
        variance,
        variance_se: batch_se(&batch_vars),
    }
}

fn separation_of(null: &[f64], planted: &[f64]) -> f64 {
    let (mq, vq) = moments(null);
    let (mp, vp) = moments(planted);
    let gap = (mp - mq).abs();
    let scale = vp.max(vq).sqrt();
    if gap == 0.0 {
        0.0
    } else {
        gap / scale
    }
}

/// Monte Carlo estimate of the separation functional, with trials drawn
/// from per-trial child streams of `seed` so results do not depend on the
/// worker count.
pub fn estimate_separation(
    params: &ProblemParams,
    statistic: &Statistic,
    trials: u64,
    seed: u64,
) -> Result<SeparationReport> {
    let threshold = statistic.threshold(params);
    estimate_separation_with_trials(params, statistic, trials, seed, threshold)
}

/// As [`estimate_separation`] with an explicit decision threshold.
pub fn estimate_separation_with_trials(
    params: &ProblemParams,
    statistic: &Statistic,
    trials: u64,
    seed: u64,
    threshold: f64,
) -> Result<SeparationReport> {
    if trials < 2 {
        return Err(invalid!("separation needs at least 2 trials (got {trials})"));
    }
    let root = StreamKey::new(seed);
    let run = |model: Model| -> Result<Vec<f64>> {
        let key = root.child(model.stream());
        try_map_indexed(trials, |t| {
            let mut rng = key.child(t).rng();
            let y = match model {
                Model::Null => sample_null_with(params, &mut rng)?,
                Model::Planted => sample_planted_with(params, &mut rng)?.y,
            };
            statistic.evaluate(&y, params)
        })
    };
    let null = run(Model::Null)?;
    let planted = run(Model::Planted)?;

    let sq = summarize(&null);
    let sp = summarize(&planted);
    let batch_seps: Vec<f64> = batches(null.len())
        .into_iter()
        .map(|r| separation_of(&null[r.clone()], &planted[r]))
        .collect();
    let t = trials as f64;
    let type_one = null.iter().filter(|&&x| decide(x, threshold) == Decision::Planted).count() as f64 / t;
    let type_two = planted.iter().filter(|&&x| decide(x, threshold) == Decision::Null).count() as f64 / t;

    let mut records = Vec::with_capacity(2 * trials as usize);
    for (model, values) in [(Model::Null, &null), (Model::Planted, &planted)] {
        for (i, &x) in values.iter().enumerate() {
            records.push(TrialRecord {
                trial: i as u64,
                model,
                statistic: x,
                decision: decide(x, threshold),
            });
        }
    }
    Ok(SeparationReport {
        statistic: statistic.name().to_string(),
        trials,
        seed,
        threshold,
        mean_null: sq.mean,
        mean_null_se: sq.mean_se,
        mean_planted: sp.mean,
        mean_planted_se: sp.mean_se,
        var_null: sq.variance,
        var_null_se: sq.variance_se,
        var_planted: sp.variance,
        var_planted_se: sp.variance_se,
        separation: separation_of(&null, &planted),
        separation_se: batch_se(&batch_seps),
        type_one_error: type_one,
        type_two_error: type_two,
        records,
    })
}
