//! `combanal`: command-line access to the combanal library.
//!
//! Results go to stdout (or `--out`), diagnostics to stderr. Exit status is
//! 0 on success, 1 when the library refuses the input or a work cap is hit,
//! and 2 for usage errors, including a format the subcommand cannot emit.

mod commands;
mod output;
mod parse;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::{render, Format, Report};

#[derive(Parser, Debug)]
#[command(name = "combanal", version, about = "Exact combinatory analysis from the command line")]
struct Cli {
    /// Output format; csv needs a tabular result and svg a drawing.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Largest number of objects an enumeration may produce or visit.
    #[arg(long, env = "COMBANAL_MAX_WORK", default_value_t = 1_000_000, global = true)]
    max_work: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partitions of integers and their tables.
    #[command(subcommand)]
    Partition(commands::partition::Cmd),
    /// Compositions, conjugates and Newcomb's deal.
    #[command(subcommand)]
    Compose(commands::compose::Cmd),
    /// Coefficients by the Master Theorem.
    #[command(subcommand)]
    Master(commands::master::Cmd),
    /// Binary quantics: Ω, O, covariants, seminvariants, syzygants.
    #[command(subcommand)]
    Invariant(commands::invariant::Cmd),
    /// Ballot probabilities.
    #[command(subcommand)]
    Ballot(commands::ballot::BallotCmd),
    /// Sampling model, seat laws and simulated elections.
    #[command(subcommand)]
    Election(commands::ballot::ElectionCmd),
    /// Cubes, tiles, stamps, Latin squares, rulers, weights, rooks.
    #[command(subcommand)]
    Puzzle(commands::puzzle::Cmd),
    /// Edge profiles, repeat tiles, tilings and polyhedra.
    #[command(subcommand)]
    Pattern(commands::pattern::Cmd),
    /// Divisor series, potency, factorizations, totients.
    #[command(subcommand)]
    Divisor(commands::divisor::Cmd),
}

/// Settings every command can consult.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub max_work: u64,
}

/// How a command failed.
#[derive(Debug)]
pub enum Failure {
    /// Bad operands: exit 2.
    Usage(String),
    /// The library refused, or the work cap was hit: exit 1.
    Refused(String),
}

impl From<combanal::Error> for Failure {
    fn from(e: combanal::Error) -> Self {
        Failure::Refused(e.to_string())
    }
}

pub type CmdResult = Result<Report, Failure>;

/// Refuse before enumerating more than the cap allows.
pub fn work(ctx: &Ctx, what: &str, amount: impl Into<f64>) -> Result<(), Failure> {
    let amount = amount.into();
    if amount > ctx.max_work as f64 {
        return Err(Failure::Refused(format!(
            "{what} needs about {amount:.0} steps, above --max-work {} (raise it or set COMBANAL_MAX_WORK)",
            ctx.max_work
        )));
    }
    Ok(())
}

pub fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = Ctx { max_work: cli.max_work };
    let result = match cli.command {
        Command::Partition(c) => commands::partition::run(c, &ctx),
        Command::Compose(c) => commands::compose::run(c, &ctx),
        Command::Master(c) => commands::master::run(c, &ctx),
        Command::Invariant(c) => commands::invariant::run(c, &ctx),
        Command::Ballot(c) => commands::ballot::run_ballot(c, &ctx),
        Command::Election(c) => commands::ballot::run_election(c, &ctx),
        Command::Puzzle(c) => commands::puzzle::run(c, &ctx),
        Command::Pattern(c) => commands::pattern::run(c, &ctx),
        Command::Divisor(c) => commands::divisor::run(c, &ctx),
    };
    let report = match result {
        Ok(r) => r,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Refused(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
    };
    let Some(doc) = render(&report, cli.format) else {
        eprintln!("error: this subcommand has no {} output", format!("{:?}", cli.format).to_lowercase());
        return ExitCode::from(2);
    };
    match cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, doc) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{doc}"),
    }
    ExitCode::SUCCESS
}
