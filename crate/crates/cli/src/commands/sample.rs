use plantlab_core::hypergraph::text::{format_vertex_list, write};
use plantlab_core::models::{sample_aux, sample_null, sample_planted};
use plantlab_core::ProblemParams;

use crate::args::{ModelKind, SampleArgs, Settings};
use crate::error::{usage, Result};

fn describe(p: &ProblemParams) -> String {
    format!("n={} r={} alpha={} beta={} gamma={}", p.n, p.r, p.alpha, p.beta, p.gamma)
}

pub fn run(args: &SampleArgs) -> Result<String> {
    let s = Settings::new(&args.common)?;
    let model: ModelKind = s
        .pick(args.model, "model")?
        .ok_or_else(|| usage("missing --model (null, planted or aux)"))?;
    let seed = s.seed()?;
    let text = match model {
        ModelKind::Null => {
            let params = s.params()?;
            let h = sample_null(&params, seed)?;
            write(
                &h,
                &[("model", "null".into()), ("params", describe(&params)), ("seed", seed.to_string())],
            )
        }
        ModelKind::Planted => {
            let params = s.params()?;
            let draw = sample_planted(&params, seed)?;
            write(
                &draw.y.to_hypergraph(),
                &[
                    ("model", "planted".into()),
                    ("params", describe(&params)),
                    ("seed", seed.to_string()),
                    ("Z", format_vertex_list(&draw.planted)),
                ],
            )
        }
        ModelKind::Aux => {
            // The spike model's hard regime allows alpha >= beta.
            let params = ProblemParams::relaxed(s.n()?, s.r()?, s.alpha()?, s.beta()?, s.gamma()?)?;
            let draw = sample_aux(&params, seed)?;
            let signs: Vec<&str> = draw
                .params
                .signs()
                .iter()
                .map(|&x| if x > 0 { "+" } else { "-" })
                .collect();
            write(
                &draw.y.to_hypergraph(),
                &[
                    ("model", "aux".into()),
                    ("params", describe(&params)),
                    ("seed", seed.to_string()),
                    ("lambda", draw.params.lambda_spike.to_string()),
                    ("Z", format_vertex_list(&draw.planted)),
                    ("u-signs", signs.join(" ")),
                ],
            )
        }
    };
    Ok(text)
}
