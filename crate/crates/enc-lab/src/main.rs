//! enc-lab: entropic inequality experiments at desk scale.
//!
//! Subcommands reproduce the standard tripartite CHSH monogamy artifacts:
//! mixture sweeps, the pure-family table, angle optimization, certificate
//! derivation, and regeneration of the readout coefficient tables.

mod commands;
mod config;
mod output;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

use config::RunConfig;

const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_SEARCH_EXHAUSTED: u8 = 3;

#[derive(Parser)]
#[command(name = "enc-lab", version, about = "entropic non-contextuality lab")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Scenario angle theta
    #[arg(long, default_value_t = 0.457)]
    theta: f64,
    /// CHSH arrangement: sec2b or eq4
    #[arg(long, default_value = "sec2b", value_parser = parse_form)]
    form: enc_inequality::ChshForm,
    /// Grid points for the angle optimization
    #[arg(long, default_value_t = 200)]
    grid: usize,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Depolarizing noise weight in [0, 1]
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    /// Seed echoed into metadata (consumed by randomized test suites)
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_form(s: &str) -> Result<enc_inequality::ChshForm, String> {
    s.parse()
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the two-branch mixture: 101 rows of H_K1, H_K2 and their sum
    SweepMixed(CommonArgs),
    /// Evaluate the five standard pure-family rows against the reference
    /// theory values
    TablePure(CommonArgs),
    /// Maximize the CHSH violation over the scenario angle
    Optimize {
        #[command(flatten)]
        common: CommonArgs,
        /// JSON state vector {"amplitudes":[[re,im],...]}; defaults to the
        /// Bell pair with a spectator qubit
        #[arg(long)]
        state: Option<PathBuf>,
    },
    /// Derive a monogamy certificate for a joint graph and target
    /// inequalities
    Derive {
        #[command(flatten)]
        common: CommonArgs,
        /// Built-in scenario: chsh-tripartite or fig1
        #[arg(long, conflicts_with_all = ["graph", "targets"])]
        example: Option<String>,
        /// Joint commutation graph JSON
        #[arg(long, requires = "targets")]
        graph: Option<PathBuf>,
        /// JSON array of target expressions
        #[arg(long, requires = "graph")]
        targets: Option<PathBuf>,
    },
    /// Regenerate the readout coefficient tables and report deviations
    AppendixCheck(CommonArgs),
}

impl CommonArgs {
    fn into_config(self) -> RunConfig {
        RunConfig {
            theta: self.theta,
            form: self.form,
            grid: self.grid,
            out: self.out,
            noise: self.noise,
            seed: self.seed,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::SweepMixed(c) => commands::sweep_mixed::run(&c.into_config()),
        Command::TablePure(c) => commands::table_pure::run(&c.into_config()),
        Command::Optimize { common, state } => {
            commands::optimize::run(&common.into_config(), state.as_deref())
        }
        Command::Derive {
            common,
            example,
            graph,
            targets,
        } => commands::derive::run(
            &common.into_config(),
            example.as_deref(),
            graph.as_deref(),
            targets.as_deref(),
        ),
        Command::AppendixCheck(c) => commands::appendix_check::run(&c.into_config()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("enc-lab: {e:#}");
            if e.is::<commands::derive::SearchFailed>() {
                ExitCode::from(EXIT_SEARCH_EXHAUSTED)
            } else {
                ExitCode::from(EXIT_INPUT_ERROR)
            }
        }
    }
}
