use rayon::prelude::*;
use serde::Serialize;

use plantlab_core::ldlr::highprec::format_pow10;
use plantlab_core::ldlr::ldlr_norm_exact;
use plantlab_core::rng::StreamKey;
use plantlab_core::stats::{classify_regime, estimate_separation, Statistic};
use plantlab_core::ProblemParams;

use super::to_json_line;
use crate::args::{Format, PhaseArgs, Settings};
use crate::error::{usage, CliError, Result};

pub const PHASE_HEADER: [&str; 7] = ["alpha", "gamma", "n", "regime", "ldlr_minus_1", "separation", "sep_se"];

pub const DEFAULT_DEGREE: u32 = 10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cell {
    pub alpha: f64,
    pub gamma: f64,
    pub n: u64,
    /// `easy`, `hard`, `boundary` or `invalid`.
    pub regime: String,
    pub ldlr_minus_1: Option<String>,
    pub separation: Option<f64>,
    pub sep_se: Option<f64>,
}

fn ldlr_text(params: &ProblemParams, degree: u32) -> Option<String> {
    let res = ldlr_norm_exact(params, degree).ok()?;
    Some(if res.value_minus_one.is_finite() {
        format!("{:.10e}", res.value_minus_one)
    } else {
        format_pow10(res.log10_value_minus_one)
    })
}

#[allow(clippy::too_many_arguments)]
fn cell(alpha: f64, beta: f64, gamma: f64, n: u64, r: u32, degree: u32, trials: u64, seed: u64) -> Cell {
    let mut out = Cell {
        alpha,
        gamma,
        n,
        regime: "invalid".into(),
        ldlr_minus_1: None,
        separation: None,
        sep_se: None,
    };
    let (Ok(params), Ok(regime)) = (
        ProblemParams::new(n, r, alpha, beta, gamma),
        classify_regime(alpha, beta, gamma, r),
    ) else {
        return out;
    };
    out.regime = regime.as_str().into();
    out.ldlr_minus_1 = ldlr_text(&params, degree);
    if trials > 0 {
        if let Ok(rep) = estimate_separation(&params, &Statistic::Edge, trials, seed) {
            out.separation = Some(rep.separation);
            out.sep_se = Some(rep.separation_se);
        }
    }
    out
}

pub fn sweep(args: &PhaseArgs) -> Result<Vec<Cell>> {
    let s = Settings::new(&args.common)?;
    let beta = s.beta()?;
    let r = s.r()?;
    let alphas: Vec<f64> = s.pick_list(&args.alpha_grid, "alpha-grid")?;
    let gammas: Vec<f64> = s.pick_list(&args.gamma_grid, "gamma-grid")?;
    let ns: Vec<u64> = s.pick_list(&args.n_grid, "n-grid")?;
    if alphas.is_empty() || gammas.is_empty() || ns.is_empty() {
        return Err(usage("--alpha-grid, --gamma-grid and --n-grid must be nonempty"));
    }
    let degree = s.degree()?.unwrap_or(DEFAULT_DEGREE);
    let trials = s.trials()?.unwrap_or(0);
    if trials == 1 {
        return Err(usage("--trials must be 0 (no simulation) or at least 2"));
    }
    let root = StreamKey::new(s.seed()?);
    let mut grid = Vec::with_capacity(alphas.len() * gammas.len() * ns.len());
    for &a in &alphas {
        for &g in &gammas {
            for &n in &ns {
                grid.push((a, g, n));
            }
        }
    }
    Ok(grid
        .par_iter()
        .enumerate()
        .map(|(i, &(a, g, n))| cell(a, beta, g, n, r, degree, trials, root.child(i as u64).raw()))
        .collect())
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub fn to_csv(cells: &[Cell]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Usage(format!("csv: {e}"));
    w.write_record(PHASE_HEADER).map_err(err)?;
    for c in cells {
        w.write_record([
            c.alpha.to_string(),
            c.gamma.to_string(),
            c.n.to_string(),
            c.regime.clone(),
            opt(&c.ldlr_minus_1),
            c.separation.map(|x| format!("{x:.6}")).unwrap_or_default(),
            c.sep_se.map(|x| format!("{x:.6}")).unwrap_or_default(),
        ])
        .map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn run(args: &PhaseArgs) -> Result<String> {
    let cells = sweep(args)?;
    match Settings::new(&args.common)?.format(Format::Csv)? {
        Format::Csv => to_csv(&cells),
        Format::Json => Ok(to_json_line(&serde_json::to_value(&cells).expect("cells serialize"))),
    }
}
