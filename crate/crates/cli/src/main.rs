use std::process::ExitCode;

use clap::{Parser, Subcommand};
use taumute::taut::default_cap;
use taumute_cli::commands::{alg_info, check_cmd, cluster_cmd, enumerate_cmd, mutate_cmd, OutputFormat, Suite};
use taumute_cli::presets::PRESET_HELP;
use taumute_cli::{CliResult, Outcome};

/// Support τ-tilting mutation, two-term silting and cluster seeds over
/// bound quiver algebras, in exact arithmetic.
#[derive(Parser)]
#[command(name = "taumute", version, after_help = format!("ALGEBRAS: {PRESET_HELP}"))]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Algebra facts.
    Alg {
        #[command(subcommand)]
        cmd: AlgCmd,
    },
    /// Enumerate all support τ-tilting pairs and their mutation graph.
    Enumerate {
        alg: String,
        /// Node budget [default: TAUMUTE_CAP or 10000]
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Mutate one pair at one slot and report the exchange sequence.
    Mutate {
        alg: String,
        /// `top`, `0;1,2,3`, or summands such as `P1+S1;3` (support after `;`)
        #[arg(long)]
        pair: String,
        /// A summand name (`P2`, `S1`, `M(1,1,0)`) or a support vertex number
        #[arg(long)]
        slot: String,
    },
    /// Run theorem checks; exit 0 iff all pass.
    Check {
        alg: String,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Enumerate cluster seeds of the quiver and check the Laurent phenomenon.
    Cluster {
        alg: String,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Subcommand)]
enum AlgCmd {
    /// Dimension, basis per degree, projective and injective dimension vectors.
    Info { alg: String },
}

fn run(cli: Cli) -> CliResult<Outcome> {
    match cli.cmd {
        Cmd::Alg { cmd: AlgCmd::Info { alg } } => alg_info(&alg),
        Cmd::Enumerate { alg, cap, format } => enumerate_cmd(&alg, cap.unwrap_or_else(default_cap), format),
        Cmd::Mutate { alg, pair, slot } => mutate_cmd(&alg, &pair, &slot),
        Cmd::Check { alg, suite, cap } => check_cmd(&alg, suite, cap.unwrap_or_else(default_cap)),
        Cmd::Cluster { alg, cap } => cluster_cmd(&alg, cap.unwrap_or_else(default_cap)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(o) => {
            print!("{}", o.text);
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
