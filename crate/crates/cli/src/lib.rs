//! Command-line front end: argument parsing, command dispatch and report
//! rendering. Each `cmd_*` function returns a serializable report so the
//! commands can also be driven from tests.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

mod commands;
pub mod io;
mod report;

pub use commands::{cmd_check, cmd_criterion, cmd_natscan, cmd_product, max_states_from_env, MAX_STATES_VAR};
pub use report::{
    CheckReport, CriterionOutput, FailureOutput, FamilyOutput, NatscanReport, NoGoOutput, OracleOutput, ProductReport,
    ValueOutput, WitnessOutput,
};

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable, malformed or inconsistent input.
    #[error("{0}")]
    Input(String),
    /// A library invariant failed.
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "prodcheck",
    version,
    about = "Model checking of labelled Markov chains against automata via weighted products"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the checking value of a chain against a DFA, NFA or MFA.
    Check(CheckArgs),
    /// Build the weighted product and write it as JSON.
    Product(ProductArgs),
    /// Enumerate natural transformations between two finite monoids.
    Natscan(NatscanArgs),
    /// Test the correctness criterion of a distributive law.
    Criterion(CriterionArgs),
}

#[derive(Debug, Clone, clap::Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub mc: PathBuf,
    #[arg(long)]
    pub spec: PathBuf,
    /// Initial pair `MCSTATE,SPECSTATE`.
    #[arg(long)]
    pub init: String,
    /// Also evaluate the truncated-trace oracle at this depth.
    #[arg(long)]
    pub oracle_depth: Option<usize>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct ProductArgs {
    #[arg(long)]
    pub mc: PathBuf,
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Restrict to pairs reachable from `MCSTATE,SPECSTATE`.
    #[arg(long)]
    pub init: Option<String>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct NatscanArgs {
    #[arg(long)]
    pub monoid_a: PathBuf,
    #[arg(long)]
    pub monoid_b: PathBuf,
    #[arg(long, default_value_t = 4)]
    pub max_set: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LawArg {
    Mfa,
    Dfa,
    NfaCandidate,
}

#[derive(Debug, Clone, clap::Args)]
pub struct CriterionArgs {
    #[arg(long, value_enum)]
    pub law: LawArg,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

/// Runs one command and renders its report.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let max_states = max_states_from_env()?;
    match &cli.command {
        Command::Check(a) => cmd_check(a, max_states).map(|r| r.render(cli.json)),
        Command::Product(a) => cmd_product(a, max_states).map(|r| r.render(cli.json)),
        Command::Natscan(a) => cmd_natscan(a).map(|r| r.render(cli.json)),
        Command::Criterion(a) => cmd_criterion(a).map(|r| r.render(cli.json)),
    }
}
