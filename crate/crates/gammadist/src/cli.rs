//! Command-line parsing. Each subcommand is lowered to a [`JobSpec`].

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::convert::unwrap_key;
use crate::error::CliError;
use crate::job::{Command, JobSpec, Mode, Options, OrderOption};

#[derive(Debug, Parser)]
#[command(
    name = "gammadist",
    version,
    about = "Distinction tests, gamma factors and orbit tools for GL_n(C) over GL_n(R)"
)]
pub struct Cli {
    /// Seed for every randomised command.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Matching tolerance in tolerance mode.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Read JSON numbers as exact rationals and match exactly.
    #[arg(long, global = true)]
    pub exact: bool,
    #[command(subcommand)]
    pub command: Top,
}

#[derive(Debug, Subcommand)]
pub enum Top {
    /// Tate and Rankin-Selberg gamma factors.
    #[command(subcommand)]
    Gamma(GammaCmd),
    /// Involution test on a Borel character.
    #[command(subcommand)]
    Distinguish(DistinguishCmd),
    /// Converse test through twisted gamma values.
    #[command(subcommand)]
    Converse(ConverseCmd),
    /// KAH decomposition, orbit classification and the unipotent probe.
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// Inversion sets, kappa solutions and normal spaces.
    #[command(subcommand)]
    Strata(StrataCmd),
    /// Run a job document.
    Run {
        #[arg(long = "job", default_value = "-")]
        job: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// JSON input file, `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct ChiArg {
    /// JSON Borel character file, `-` for stdin.
    #[arg(long, default_value = "-")]
    pub chi: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum GammaCmd {
    /// `{"s", "chi": {"sigma", "k"}}`
    Tate(InputArg),
    /// `{"s", "chi": [...], "chi_prime": [...]}`
    Rs(InputArg),
    /// `{"s", "chi": {"sigma", "k"}}`
    FeDefect(InputArg),
}

#[derive(Debug, Subcommand)]
pub enum DistinguishCmd {
    Check(ChiArg),
    Verify {
        #[command(flatten)]
        chi: ChiArg,
        #[arg(long)]
        cert: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConverseCmd {
    Decide(ChiArg),
    Scan {
        #[command(flatten)]
        chi: ChiArg,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        range: Option<Vec<i64>>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MatrixCmd {
    Kah {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "kah")]
        order: OrderArg,
    },
    Orbit(InputArg),
    Probe {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 3.0)]
        max_log10: f64,
        #[arg(long, default_value_t = 1e-6)]
        margin: f64,
    },
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum OrderArg {
    Kah,
    Hak,
}

#[derive(Debug, Subcommand)]
pub enum StrataCmd {
    Iw {
        /// One-line notation, e.g. "3 2 1".
        #[arg(long)]
        w: String,
    },
    Kappa {
        #[arg(long)]
        w: String,
        /// Non-increasing rationals, e.g. "1 1/2 -1/2 -1".
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    Normal {
        #[arg(long)]
        w: String,
    },
}

pub fn read_source(path: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(text)
}

fn read_json(path: &PathBuf) -> Result<Value, CliError> {
    Ok(serde_json::from_str(&read_source(path)?)?)
}

fn keyed(key: &str, path: &PathBuf) -> Result<Value, CliError> {
    let doc = read_json(path)?;
    Ok(json!({ key: unwrap_key(&doc, key) }))
}

impl Cli {
    fn base_options(&self) -> Options {
        Options {
            mode: self.exact.then_some(Mode::Exact),
            tol: self.tol,
            seed: self.seed,
            ..Options::default()
        }
    }

    /// Reads the inputs the subcommand names and builds its job.
    pub fn to_job(&self) -> Result<JobSpec, CliError> {
        let mut options = self.base_options();
        let (command, inputs) = match &self.command {
            Top::Run { job } => {
                let mut spec = JobSpec::parse(&read_source(job)?)?;
                // command-line flags override the document
                if self.exact {
                    spec.options.mode = Some(Mode::Exact);
                }
                spec.options.tol = self.tol.or(spec.options.tol);
                spec.options.seed = self.seed.or(spec.options.seed);
                return Ok(spec);
            }
            Top::Gamma(g) => match g {
                GammaCmd::Tate(a) => (Command::GammaTate, read_json(&a.input)?),
                GammaCmd::Rs(a) => (Command::GammaRs, read_json(&a.input)?),
                GammaCmd::FeDefect(a) => (Command::GammaFeDefect, read_json(&a.input)?),
            },
            Top::Distinguish(d) => match d {
                DistinguishCmd::Check(c) => (Command::DistinguishCheck, keyed("chi", &c.chi)?),
                DistinguishCmd::Verify { chi, cert } => {
                    let mut inputs = keyed("chi", &chi.chi)?;
                    inputs["certificate"] = unwrap_key(&read_json(cert)?, "certificate").clone();
                    (Command::DistinguishVerify, inputs)
                }
            },
            Top::Converse(c) => match c {
                ConverseCmd::Decide(c) => (Command::ConverseDecide, keyed("chi", &c.chi)?),
                ConverseCmd::Scan { chi, range } => {
                    options.range = range.as_ref().map(|r| [r[0], r[1]]);
                    (Command::ConverseScan, keyed("chi", &chi.chi)?)
                }
            },
            Top::Matrix(m) => match m {
                MatrixCmd::Kah { input, order } => {
                    options.order = Some(match order {
                        OrderArg::Kah => OrderOption::Kah,
                        OrderArg::Hak => OrderOption::Hak,
                    });
                    (Command::MatrixKah, keyed("matrix", &input.input)?)
                }
                MatrixCmd::Orbit(a) => (Command::MatrixOrbit, keyed("matrix", &a.input)?),
                MatrixCmd::Probe {
                    n,
                    samples,
                    max_log10,
                    margin,
                } => {
                    options.n = Some(*n);
                    options.samples = Some(*samples);
                    options.max_log10 = Some(*max_log10);
                    options.margin = Some(*margin);
                    (Command::MatrixProbe, json!({}))
                }
            },
            Top::Strata(s) => match s {
                StrataCmd::Iw { w } => (Command::StrataIw, json!({ "w": w })),
                StrataCmd::Kappa { w, lambda, bound } => {
                    options.bound = Some(*bound);
                    (Command::StrataKappa, json!({ "w": w, "lambda": lambda }))
                }
                StrataCmd::Normal { w } => (Command::StrataNormal, json!({ "w": w })),
            },
        };
        Ok(JobSpec {
            command,
            inputs,
            options,
        })
    }
}
