use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tcs_core::wavefunction::StateSpec;

use crate::error::CliError;

#[derive(Debug, Clone, Parser)]
#[command(name = "tcs", version, about = "Eigenstate verification and spectra of the truncated Calogero-Sutherland model")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Couplings, regime, pair and triple counts, ground energy.
    Params,
    /// Reproduce the published table of ground energies and adjudicate conflicts.
    Table1,
    /// Local-energy check of the ground state.
    VerifyGround,
    /// Local-energy check of a named excited state.
    VerifyExcited {
        #[arg(long, value_enum)]
        state: StateArg,
        /// Galilei boost: multiply by `(prod z)^q`.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        q: i32,
    },
    /// Certified symmetric spectrum of the transformed operator.
    Spectrum {
        #[arg(long, conflicts_with = "max_degree")]
        degree: Option<usize>,
        /// Every degree from 0 through this one.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Pencil certification threshold.
        #[arg(long, default_value_t = tcs_core::spectral::CERTIFY_TOL)]
        cert_tol: f64,
        /// Also check parity partners and `q = 1` boosts of certified vectors.
        #[arg(long)]
        symmetry: bool,
        /// Lift the default `n <= 8`, `degree <= n` cap.
        #[arg(long)]
        no_cap: bool,
    },
    /// Three-body term count by formula and by enumeration.
    CountTriples {
        /// List the triples as `[i, center, k]`, 1-based.
        #[arg(long)]
        enumerate: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateArg {
    Ground,
    E1,
    #[value(name = "en-1")]
    ENm1,
    En,
    Combo,
    CosSum,
    SinSum,
    NondegZero,
}

impl StateArg {
    pub fn spec(self, q: i32) -> StateSpec {
        let base = match self {
            StateArg::Ground => StateSpec::Ground,
            StateArg::E1 => StateSpec::E1,
            StateArg::ENm1 => StateSpec::ENm1,
            StateArg::En => StateSpec::EN,
            StateArg::Combo => StateSpec::Combo,
            StateArg::CosSum => StateSpec::CosSum,
            StateArg::SinSum => StateSpec::SinSum,
            StateArg::NondegZero => StateSpec::NonDegZero,
        };
        if q == 0 {
            base
        } else {
            StateSpec::boosted(base, q)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Particle count.
    #[arg(long = "n", global = true)]
    pub n: Option<usize>,
    /// Interaction range.
    #[arg(long, global = true)]
    pub r: Option<usize>,
    #[arg(long, global = true)]
    pub beta: Option<f64>,
    /// Circumference (default 2 pi).
    #[arg(long, visible_alias = "L", global = true)]
    pub length: Option<f64>,
    #[arg(long, default_value_t = 2000, global = true)]
    pub samples: usize,
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    /// Rejection floor on pair separation, as a fraction of L.
    #[arg(long, default_value_t = tcs_core::oracle::DEFAULT_MIN_SEP_FRAC, global = true)]
    pub min_sep_frac: f64,
    #[arg(long, default_value_t = tcs_core::oracle::DEFAULT_TOL, global = true)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub output: Format,
    /// Write the report here instead of stdout.
    #[arg(long = "out", global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for sample evaluation.
    #[arg(long, env = "TCS_THREADS", global = true)]
    pub threads: Option<usize>,
    /// Evaluate and reduce samples sequentially.
    #[arg(long, global = true)]
    pub deterministic: bool,
}

/// Validated run parameters echoed into every report. Thread count and
/// output destination are left out so they cannot change the report bytes.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    #[serde(rename = "N")]
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub beta: Option<f64>,
    #[serde(rename = "L")]
    pub length: f64,
    pub samples: usize,
    pub seed: u64,
    pub min_sep_frac: f64,
    pub tol: f64,
    pub output: Format,
    pub deterministic: bool,
}

impl RunArgs {
    pub fn config(&self) -> Result<RunConfig, CliError> {
        let length = self.length.unwrap_or(2.0 * PI);
        if self.samples == 0 {
            return Err(CliError::Usage("--samples must be at least 1".into()));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(CliError::Usage("--tol must be positive".into()));
        }
        if self.threads == Some(0) {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        Ok(RunConfig {
            n: self.n,
            r: self.r,
            beta: self.beta,
            length,
            samples: self.samples,
            seed: self.seed,
            min_sep_frac: self.min_sep_frac,
            tol: self.tol,
            output: self.output,
            deterministic: self.deterministic,
        })
    }
}

impl RunConfig {
    /// `(n, r, beta)`, all required.
    pub fn model_inputs(&self) -> Result<(usize, usize, f64), CliError> {
        match (self.n, self.r, self.beta) {
            (Some(n), Some(r), Some(beta)) => Ok((n, r, beta)),
            _ => Err(CliError::Usage("--n, --r and --beta are required for this command".into())),
        }
    }
}
