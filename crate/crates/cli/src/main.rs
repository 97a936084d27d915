//! `dicelab` — command-line front end for the exact dice-game engine.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation or runtime error
//! (for example a malformed die literal), 3 when a verification subcommand
//! produced a falsifying result — so CI pipelines can gate on the verified
//! claims directly.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use dicelab_core::dice::Die;
use dicelab_core::payoff::PayoffReport;
use dicelab_core::{
    all_one_step_counters, build_beats_digraph, construct_counter, count_dice, enumerate_dice,
    find_nontransitive_cycles, find_pure_nash, rank_one_step_dice, run_verification_suite,
    tally, verify_one_step_connectivity,
};

use output::{Format, Output};

#[derive(Parser)]
#[command(
    name = "dicelab",
    version,
    about = "Exact engine for the two-player pick-a-die game"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report to a file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Worker threads for the space scans (defaults to all cores; ignored
    /// in builds without the parallel feature)
    #[arg(long, global = true, value_name = "COUNT",
          value_parser = clap::value_parser!(u64).range(1..=1024))]
    workers: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// List every valid die for a side count, one per line
    Enum {
        /// Number of sides
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Print only the number of dice
        #[arg(long)]
        count_only: bool,
    },
    /// Exact payoff of die A against die B
    Payoff {
        /// Die literal for player A, e.g. '[1,1,4,4]'
        #[arg(long)]
        a: String,
        /// Die literal for player B
        #[arg(long)]
        b: String,
    },
    /// Construct a die one step from standard that beats the given die
    Counter {
        /// Target die literal
        #[arg(long)]
        die: String,
        /// Report every one-step counter instead of a single certificate
        #[arg(long, conflicts_with = "rank")]
        all: bool,
        /// Rank all one-step dice by payoff against the target
        #[arg(long)]
        rank: bool,
    },
    /// Exhaustive pure-Nash equilibrium search over the die space
    Nash {
        /// Number of sides
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Check that the die space is connected under one-step moves
    Connectivity {
        /// Number of sides
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Materialize the beats digraph, optionally searching for cycles
    Graph {
        /// Number of sides
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Also list directed beat cycles of this length
        #[arg(long, value_name = "LENGTH",
              value_parser = clap::value_parser!(u64).range(3..=5))]
        cycles: Option<u64>,
    },
    /// Run every verification check for n = 1 up to a limit
    VerifyAll {
        /// Largest side count to verify
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
}

fn parse_die(text: &str) -> Result<Die, String> {
    let faces: Vec<u32> = serde_json::from_str(text).map_err(|_| {
        format!("die literal {text:?} is not a JSON array of integers, e.g. '[1,1,4,4]'")
    })?;
    Die::new(faces).map_err(|e| format!("invalid die {text}: {e}"))
}

fn execute(command: &Command) -> Result<Output, String> {
    match command {
        Command::Enum { n, count_only: true } => Ok(Output::Count(count_dice(*n))),
        Command::Enum { n, count_only: false } => Ok(Output::DieList {
            dice: enumerate_dice(*n).collect(),
        }),
        Command::Payoff { a, b } => {
            let a = parse_die(a)?;
            let b = parse_die(b)?;
            let t = tally(&a, &b).map_err(|e| e.to_string())?;
            Ok(Output::Payoff {
                a,
                b,
                report: PayoffReport::from(t),
            })
        }
        Command::Counter { die, all, rank } => {
            let target = parse_die(die)?;
            if *rank {
                let ranking = rank_one_step_dice(&target).map_err(|e| e.to_string())?;
                Ok(Output::Ranking { target, ranking })
            } else if *all {
                let certs = all_one_step_counters(&target).map_err(|e| e.to_string())?;
                Ok(Output::Certificates(certs))
            } else {
                let cert = construct_counter(&target).map_err(|e| e.to_string())?;
                Ok(Output::Certificate(cert))
            }
        }
        Command::Nash { n } => Ok(Output::Nash(find_pure_nash(*n))),
        Command::Connectivity { n } => Ok(Output::Connectivity {
            n: *n,
            connected: verify_one_step_connectivity(*n),
        }),
        Command::Graph { n, cycles } => {
            let digraph = build_beats_digraph(*n);
            let cycles = cycles.map(|len| {
                let len = len as usize;
                (len, find_nontransitive_cycles(*n, len))
            });
            Ok(Output::Graph { digraph, cycles })
        }
        Command::VerifyAll { max_n } => Ok(Output::Suite(run_verification_suite(*max_n))),
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    #[cfg(feature = "parallel")]
    if let Some(workers) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers as usize)
            .build_global()
            .map_err(|e| format!("cannot configure {workers} worker threads: {e}"))?;
    }

    let report = execute(&cli.command)?;
    let rendered = report.render(cli.format);
    match &cli.output {
        Some(path) => fs::write(path, rendered.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(if report.falsified() { 3 } else { 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
