use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use plantlab_core::ProblemParams;

use crate::config::Config;
use crate::error::{usage, CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "plantlab", version, about = "Planted dense subhypergraph experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw one hypergraph from the null, planted or spike model.
    Sample(SampleArgs),
    /// Run a detection test on a file, or estimate its separation by simulation.
    Test(TestArgs),
    /// Sweep (alpha, gamma, n) and report regime, LDLR norm and separation.
    PhaseDiagram(PhaseArgs),
    /// Squared norm of the degree-D likelihood ratio.
    Ldlr(LdlrArgs),
    /// Find the canonical balanced motif for the motif test.
    FindBalanced(CommonArgs),
}

/// Flags shared by every command. Each may also come from `--config`.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub trials: Option<u64>,
    /// Degree cap D.
    #[arg(long)]
    pub degree: Option<u32>,
    #[arg(long)]
    pub delta: Option<f64>,
    /// Output file (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// `key = value` file; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Null,
    Planted,
    Aux,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatKind {
    Edge,
    Motif,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LdlrMode {
    Exact,
    Bruteforce,
    Conditional,
}

macro_rules! value_enum_from_str {
    ($($t:ty),*) => {$(
        impl FromStr for $t {
            type Err = String;
            fn from_str(s: &str) -> std::result::Result<Self, String> {
                <$t as ValueEnum>::from_str(s, true)
            }
        }
    )*};
}
value_enum_from_str!(Format, ModelKind, StatKind, LdlrMode);

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
}

#[derive(Debug, Clone, Args)]
pub struct TestArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum)]
    pub stat: Option<StatKind>,
    /// Hypergraph file to test; without it, simulate `--trials` draws per model.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Motif JSON as written by `find-balanced`; searched for when absent.
    #[arg(long)]
    pub motif: Option<PathBuf>,
    /// Also write the per-trial CSV here.
    #[arg(long)]
    pub records: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PhaseArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_delimiter = ',')]
    pub alpha_grid: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub gamma_grid: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub n_grid: Vec<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct LdlrArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum)]
    pub mode: Option<LdlrMode>,
}

/// Flags merged over the optional config file.
pub struct Settings<'a> {
    pub args: &'a CommonArgs,
    pub config: Config,
}

impl<'a> Settings<'a> {
    pub fn new(args: &'a CommonArgs) -> Result<Self> {
        let config = match &args.config {
            Some(path) => Config::load(path)?,
            None => Config::default(),
        };
        Ok(Settings { args, config })
    }

    pub fn pick<T>(&self, flag: Option<T>, key: &str) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: Display,
    {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.config.get(key),
        }
    }

    pub fn pick_list<T>(&self, flag: &[T], key: &str) -> Result<Vec<T>>
    where
        T: FromStr + Clone,
        T::Err: Display,
    {
        if !flag.is_empty() {
            return Ok(flag.to_vec());
        }
        Ok(self.config.get_list(key)?.unwrap_or_default())
    }

    pub fn require<T>(&self, flag: Option<T>, key: &str) -> Result<T>
    where
        T: FromStr,
        T::Err: Display,
    {
        self.pick(flag, key)?.ok_or_else(|| usage(format!("missing --{key}")))
    }

    pub fn n(&self) -> Result<u64> {
        self.require(self.args.n, "n")
    }

    pub fn r(&self) -> Result<u32> {
        Ok(self.pick(self.args.r, "r")?.unwrap_or(2))
    }

    pub fn alpha(&self) -> Result<f64> {
        self.require(self.args.alpha, "alpha")
    }

    pub fn beta(&self) -> Result<f64> {
        self.require(self.args.beta, "beta")
    }

    pub fn gamma(&self) -> Result<f64> {
        self.require(self.args.gamma, "gamma")
    }

    pub fn seed(&self) -> Result<u64> {
        Ok(self.pick(self.args.seed, "seed")?.unwrap_or(0))
    }

    pub fn trials(&self) -> Result<Option<u64>> {
        self.pick(self.args.trials, "trials")
    }

    pub fn degree(&self) -> Result<Option<u32>> {
        self.pick(self.args.degree, "degree")
    }

    pub fn delta(&self) -> Result<Option<f64>> {
        self.pick(self.args.delta, "delta")
    }

    pub fn format(&self, default: Format) -> Result<Format> {
        Ok(self.pick(self.args.format, "format")?.unwrap_or(default))
    }

    pub fn out(&self) -> Result<Option<PathBuf>> {
        self.pick(self.args.out.clone(), "out")
    }

    pub fn path(&self, flag: Option<&Path>, key: &str) -> Result<Option<PathBuf>> {
        self.pick(flag.map(Path::to_path_buf), key)
    }

    pub fn params_with_n(&self, n: u64) -> Result<ProblemParams> {
        Ok(ProblemParams::new(n, self.r()?, self.alpha()?, self.beta()?, self.gamma()?)?)
    }

    pub fn params(&self) -> Result<ProblemParams> {
        self.params_with_n(self.n()?)
    }
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_output(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}
