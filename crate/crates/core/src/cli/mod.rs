//! The `toricnet` command line: argument parsing, dispatch and error reports.

mod algebra;
pub mod parse;
mod reactions;
mod toric;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::crn::{Bindings, CrnError, Tolerances};
use crate::exactcore::rational::parse_rational;
use crate::exactcore::SeriesError;
use crate::freeprob::FreeProbError;
use crate::hopfdiff::{BetaError, FglError};
use crate::ncsf::SymError;
use crate::torictop::TopError;

pub use algebra::{FreeCommand, HopfCommand, QsymCommand, SymCommand};
pub use reactions::CrnCommand;
pub use toric::ToricCommand;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "toricnet", version, about = "Toric reaction networks, quasitoric characteristic numbers and Hopf algebras of formal diffeomorphisms")]
pub struct Cli {
    #[command(flatten)]
    pub config: GlobalFlags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalFlags {
    /// Truncation order of every series computation.
    #[arg(long, global = true, default_value_t = 8)]
    pub order: usize,
    /// Overrides the numerical tolerances of steady states and simulation.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Reverses the orientation of quasitoric data.
    #[arg(long, global = true)]
    pub orientation_flip: bool,
    /// Numeric rate values, e.g. `k1=2,k2=1/3`.
    #[arg(long, global = true)]
    pub bindings: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reaction network invariants and steady states.
    #[command(subcommand)]
    Crn(CrnCommand),
    /// Quasisymmetric functions in the monomial basis.
    #[command(subcommand)]
    Qsym(QsymCommand),
    /// Symmetric functions in the e, h, p, m and s bases.
    #[command(subcommand)]
    Sym(SymCommand),
    /// Landweber–Novikov and noncommutative diffeomorphism Hopf algebras.
    #[command(subcommand)]
    Hopf(HopfCommand),
    /// Free and classical cumulants, Hirzebruch series.
    #[command(subcommand)]
    Freeprob(FreeCommand),
    /// Quasitoric data, characteristic numbers and Delzant polytopes.
    #[command(subcommand)]
    Toric(ToricCommand),
}

/// Validated global settings.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub order: usize,
    pub tolerances: Tolerances,
    pub format: Option<Format>,
    pub orientation_flip: bool,
    pub bindings: Option<Bindings>,
}

impl RunConfig {
    pub fn from_flags(flags: &GlobalFlags) -> Result<Self, CliError> {
        if flags.order == 0 {
            return Err(CliError::input("Usage", "--order must be at least 1"));
        }
        let tolerances = match flags.tol {
            None => Tolerances::default(),
            Some(t) if t > 0.0 && t.is_finite() => Tolerances::uniform(t),
            Some(t) => return Err(CliError::input("Usage", format!("--tol must be positive, got {t}"))),
        };
        let bindings = flags.bindings.as_deref().map(parse_bindings).transpose()?;
        Ok(RunConfig { order: flags.order, tolerances, format: flags.format, orientation_flip: flags.orientation_flip, bindings })
    }
}

/// `k1=2,k2=1/3`.
pub fn parse_bindings(text: &str) -> Result<Bindings, CliError> {
    let mut out = Bindings::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = item.split_once('=').ok_or_else(|| CliError::input("Usage", format!("binding `{item}` is not of the form name=value")))?;
        let value = parse_rational(value.trim()).map_err(|e| CliError::input("Usage", e.0))?;
        if out.insert(name.trim().to_string(), value).is_some() {
            return Err(CliError::input("Usage", format!("`{}` is bound twice", name.trim())));
        }
    }
    Ok(out)
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{detail}")]
    Input { kind: &'static str, detail: String },
    #[error(transparent)]
    Crn(#[from] CrnError),
    #[error(transparent)]
    Top(#[from] TopError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    FreeProb(#[from] FreeProbError),
    #[error(transparent)]
    Fgl(#[from] FglError),
    #[error(transparent)]
    Beta(#[from] BetaError),
}

/// Name of the outermost enum variant in a `Debug` rendering.
fn variant_name(debug: &str) -> String {
    debug.split(|c: char| !c.is_alphanumeric() && c != '_').next().unwrap_or("Error").to_string()
}

impl CliError {
    pub fn input(kind: &'static str, detail: impl Into<String>) -> Self {
        CliError::Input { kind, detail: detail.into() }
    }

    /// The variant that caused the failure, looking through wrappers.
    pub fn kind(&self) -> String {
        match self {
            CliError::Input { kind, .. } => (*kind).to_string(),
            CliError::Crn(e) | CliError::Top(TopError::Crn(e)) => variant_name(&format!("{e:?}")),
            CliError::Top(TopError::Matrix(e)) => variant_name(&format!("{e:?}")),
            CliError::Top(e) => variant_name(&format!("{e:?}")),
            CliError::Series(e) | CliError::FreeProb(FreeProbError::Series(e)) => variant_name(&format!("{e:?}")),
            CliError::Sym(e) => variant_name(&format!("{e:?}")),
            CliError::FreeProb(e) => variant_name(&format!("{e:?}")),
            CliError::Fgl(e) => variant_name(&format!("{e:?}")),
            CliError::Beta(e) => variant_name(&format!("{e:?}")),
        }
    }

    /// 2 for domain refusals, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self.kind().as_str() {
            "DeficiencyNonzero" | "NotComplexBalanced" | "NonSmooth" => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "detail": self.to_string() } })
    }
}

/// A result with both renderings; `default` applies when `--format` is absent.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub default: Format,
}

impl Report {
    pub fn json(json: Value, text: String) -> Self {
        Report { json, text, default: Format::Json }
    }

    pub fn text(text: String, json: Value) -> Self {
        Report { json, text, default: Format::Text }
    }

    pub fn render(&self, format: Option<Format>) -> String {
        match format.unwrap_or(self.default) {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json values always serialize"),
            Format::Text => self.text.trim_end().to_string(),
        }
    }
}

pub(crate) fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize to json")
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let cfg = RunConfig::from_flags(&cli.config)?;
    let report = match &cli.command {
        Command::Crn(c) => reactions::run(c, &cfg)?,
        Command::Qsym(c) => algebra::run_qsym(c)?,
        Command::Sym(c) => algebra::run_sym(c)?,
        Command::Hopf(c) => algebra::run_hopf(c, &cfg)?,
        Command::Freeprob(c) => algebra::run_freeprob(c, &cfg)?,
        Command::Toric(c) => toric::run(c, &cfg)?,
    };
    Ok(report.render(cfg.format))
}

/// Parses `args` (program name first) and returns the exit status with the text for
/// standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    (0, e.render().to_string().trim_end().to_string())
                }
                _ => {
                    let err = CliError::input("Usage", e.render().to_string().trim_end().to_string());
                    (1, err.to_json().to_string())
                }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => (0, out),
        Err(e) => (e.exit_code(), e.to_json().to_string()),
    }
}
