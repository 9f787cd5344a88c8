use crate::output::{cloud_svg, write_all};
use crate::{usage, Failure};
use clap::{Args, Subcommand};
use num_rational::BigRational;
use renormkit::codes::partition::{beta_grid, default_eta, partition_sweep, sweep_csv};
use renormkit::codes::{enumerate_linear_codes, sample_codes, CodeEnsemble};
use renormkit::complexity::{ComplexityProxy, DEFAULT_BUDGET};
use renormkit::rational::parse_rational;
use serde::Serialize;
use std::path::{Path, PathBuf};

/// Largest number of linear codes `--linear` will enumerate.
const LINEAR_CAP: u128 = 1_000_000;

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "action", rename_all = "kebab-case")]
pub enum CodesCommand {
    /// Code-point cloud as CSV and SVG with the bound curves.
    Cloud(CloudArgs),
    /// Partition-sum sweep over β.
    Sweep(SweepArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct EnsembleArgs {
    #[arg(long, default_value_t = 2)]
    pub q: usize,
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    /// Number of sampled codes.
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    /// Words per sampled code.
    #[arg(long, default_value_t = 16)]
    pub size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Enumerate every linear code over `F_q` instead of sampling.
    #[arg(long)]
    pub linear: bool,
    /// Search budget of the complexity proxy.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

impl EnsembleArgs {
    fn build(&self) -> Result<CodeEnsemble, Failure> {
        if self.n == 0 {
            return Err(usage("--n must be positive"));
        }
        let proxy = ComplexityProxy::with_budget(self.budget).map_err(usage)?;
        let result = if self.linear {
            enumerate_linear_codes(self.q, self.n, LINEAR_CAP, &proxy)
        } else {
            sample_codes(self.q, self.n, self.size, self.count, self.seed, &proxy)
        };
        result.map_err(usage)
    }
}

#[derive(Debug, Args, Serialize)]
pub struct CloudArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    /// CSV output; standard output when neither file is given.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct SweepArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    /// Target rate R, as a rational or decimal.
    #[arg(long, default_value = "1/2")]
    pub rate: String,
    /// Rate matching tolerance.
    #[arg(long)]
    pub eta: Option<String>,
    /// Minimal relative distance Δ.
    #[arg(long, default_value = "0")]
    pub delta: String,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta_min: f64,
    #[arg(long, default_value_t = 4.0, allow_hyphen_values = true)]
    pub beta_max: f64,
    #[arg(long, default_value_t = 9)]
    pub steps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn rational(flag: &str, s: &str) -> Result<BigRational, Failure> {
    parse_rational(s).map_err(|e| usage(format!("--{flag}: {e}")))
}

pub fn run(cmd: &CodesCommand) -> Result<(), Failure> {
    match cmd {
        CodesCommand::Cloud(a) => {
            let ensemble = a.ensemble.build()?;
            let csv = ensemble.cloud_csv();
            let mut files: Vec<(&Path, String)> = Vec::new();
            if let Some(p) = &a.out {
                files.push((p, csv.clone()));
            }
            if let Some(p) = &a.svg {
                files.push((p, cloud_svg(&ensemble)));
            }
            if files.is_empty() {
                print!("{csv}");
            }
            write_all(&files)
        }
        CodesCommand::Sweep(a) => {
            if !(a.beta_min.is_finite() && a.beta_max.is_finite()) || a.steps == 0 {
                return Err(usage("β range must be finite and --steps positive"));
            }
            let rate = rational("rate", &a.rate)?;
            let delta = rational("delta", &a.delta)?;
            let eta = match &a.eta {
                Some(s) => rational("eta", s)?,
                None => default_eta(),
            };
            let ensemble = a.ensemble.build()?;
            let rows = partition_sweep(&ensemble, &rate, &delta, &eta, &beta_grid(a.beta_min, a.beta_max, a.steps));
            let csv = sweep_csv(&ensemble, &rows);
            match &a.out {
                Some(p) => write_all(&[(p, csv)]),
                None => {
                    print!("{csv}");
                    Ok(())
                }
            }
        }
    }
}
