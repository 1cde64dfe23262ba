mod args;
mod commands;
mod config;
mod error;

use std::process::ExitCode;

use clap::Parser;

use args::{write_output, Cli, Command, Settings};
use error::{usage, Result};

/// Worker threads for trial and grid parallelism. Output never depends on it.
const WORKERS_ENV: &str = "PLANTLAB_WORKERS";

fn init_workers() -> Result<()> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let workers: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&w| w > 0)
        .ok_or_else(|| usage(format!("{WORKERS_ENV} must be a positive integer (got {raw:?})")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| usage(format!("{WORKERS_ENV}: {e}")))
}

fn run(cli: &Cli) -> Result<()> {
    init_workers()?;
    let (common, output) = match &cli.command {
        Command::Sample(a) => (&a.common, commands::sample::run(a)?),
        Command::Test(a) => (&a.common, commands::test::run(a)?),
        Command::PhaseDiagram(a) => (&a.common, commands::phase::run(a)?),
        Command::Ldlr(a) => (&a.common, commands::ldlr::run(a)?),
        Command::FindBalanced(a) => (a, commands::find_balanced::run(a)?),
    };
    let out = Settings::new(common)?.out()?;
    write_output(out.as_deref(), &output)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
