use serde_json::json;

use plantlab_core::ldlr::{
    build_conditioning_spec, conditional_ldlr_exact_tiny, ldlr_norm_bruteforce, ldlr_norm_exact,
};

use super::to_json_line;
use crate::args::{Format, LdlrArgs, LdlrMode, Settings};
use crate::error::{usage, Result};

pub const DEFAULT_DEGREE: u32 = 10;

pub fn run(args: &LdlrArgs) -> Result<String> {
    let s = Settings::new(&args.common)?;
    let params = s.params()?;
    let mode = s.pick(args.mode, "mode")?.unwrap_or(LdlrMode::Exact);
    let degree = s.degree()?.unwrap_or(DEFAULT_DEGREE);
    let mut spec = None;
    let result = match mode {
        LdlrMode::Exact => ldlr_norm_exact(&params, degree)?,
        LdlrMode::Bruteforce => ldlr_norm_bruteforce(&params, degree)?,
        LdlrMode::Conditional => {
            let delta = s.delta()?.ok_or_else(|| usage("delta required for --mode conditional"))?;
            let built = build_conditioning_spec(&params, delta, degree)?;
            let res = conditional_ldlr_exact_tiny(&params, &built)?;
            spec = Some(built);
            res
        }
    };
    match s.format(Format::Json)? {
        Format::Csv => Ok(result.to_csv()),
        Format::Json => {
            let mut value = json!({
                "params": {
                    "n": params.n,
                    "r": params.r,
                    "alpha": params.alpha,
                    "beta": params.beta,
                    "gamma": params.gamma,
                },
                "result": result,
            });
            if let Some(spec) = spec {
                value["conditioning"] = serde_json::to_value(spec).expect("spec serializes");
            }
            Ok(to_json_line(&value))
        }
    }
}
