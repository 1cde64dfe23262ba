use serde_json::{json, Value};

use plantlab_core::balanced::find_balanced_motif;
use plantlab_core::hypergraph::text;
use plantlab_core::stats::{estimate_separation, threshold_test, SeparationReport, Statistic};
use plantlab_core::ProblemParams;

use super::{load_motif, to_json_line};
use crate::args::{read_file, write_output, Format, Settings, StatKind, TestArgs};
use crate::error::{usage, CliError, Result};

pub const RECORDS_HEADER: [&str; 4] = ["trial", "model", "statistic", "decision"];

pub fn records_csv(report: &SeparationReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Usage(format!("csv: {e}"));
    w.write_record(RECORDS_HEADER).map_err(io)?;
    for r in &report.records {
        w.write_record([
            r.trial.to_string(),
            r.model.as_str().to_string(),
            r.statistic.to_string(),
            r.decision.as_str().to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn statistic(args: &TestArgs, s: &Settings, params: &ProblemParams) -> Result<Statistic> {
    let kind = s.pick(args.stat, "stat")?.unwrap_or(StatKind::Edge);
    Ok(match kind {
        StatKind::Edge => Statistic::Edge,
        StatKind::Motif => match s.path(args.motif.as_deref(), "motif")? {
            Some(path) => {
                let motif = load_motif(&path)?;
                if motif.r() != params.r {
                    return Err(usage(format!("motif is {}-uniform but r = {}", motif.r(), params.r)));
                }
                Statistic::Motif(motif)
            }
            None => Statistic::Motif(find_balanced_motif(params.alpha, params.beta, params.gamma, params.r)?),
        },
    })
}

fn with_motif(mut value: Value, stat: &Statistic) -> Value {
    if let Statistic::Motif(m) = stat {
        value["motif"] = m.to_json();
    }
    value
}

pub fn run(args: &TestArgs) -> Result<String> {
    let s = Settings::new(&args.common)?;
    if let Some(input) = s.path(args.input.as_deref(), "input")? {
        let doc = text::parse(&read_file(&input)?)?;
        let h = &doc.hypergraph;
        let n = s.pick(args.common.n, "n")?.unwrap_or(h.n() as u64);
        let r = s.pick(args.common.r, "r")?.unwrap_or(h.r());
        if n != h.n() as u64 || r != h.r() {
            return Err(usage(format!(
                "input has n = {}, r = {} but flags say n = {n}, r = {r}",
                h.n(),
                h.r()
            )));
        }
        let params = ProblemParams::new(n, r, s.alpha()?, s.beta()?, s.gamma()?)?;
        let stat = statistic(args, &s, &params)?;
        let outcome = threshold_test(&h.to_tensor(), &params, &stat)?;
        let value = json!({
            "statistic": stat.name(),
            "value": outcome.statistic,
            "threshold": outcome.threshold,
            "decision": outcome.decision.as_str(),
        });
        return Ok(to_json_line(&with_motif(value, &stat)));
    }

    let params = s.params()?;
    let stat = statistic(args, &s, &params)?;
    let trials = s.trials()?.unwrap_or(200);
    let report = estimate_separation(&params, &stat, trials, s.seed()?)?;
    let csv = records_csv(&report)?;
    if let Some(path) = s.path(args.records.as_deref(), "records")? {
        write_output(Some(&path), &csv)?;
    }
    match s.format(Format::Json)? {
        Format::Csv => Ok(csv),
        Format::Json => {
            let value = serde_json::to_value(&report).expect("report serializes");
            Ok(to_json_line(&with_motif(value, &stat)))
        }
    }
}
