use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use torusdisc::adelic::DEFAULT_BUDGET;
use torusdisc_cli::{execute, parse_config, CliError, Command, Format, Options};

#[derive(Parser, Debug)]
#[command(name = "torusdisc", version, about = "Discriminants and heights of tori in GL(n)")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// JSON configuration (schema "torusdisc/1").
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    /// Seed for randomized conjugator families.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest finite ring enumerated element by element.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Height δ, lattice discriminant, wedge ν, [O:Λ] and d_E per torus.
    Delta,
    /// disc_K per torus with the splitting-discriminant mode.
    Disc,
    /// δ against disc_K over a family: CSV rows and fitted equivalence witnesses.
    Verify,
    /// Weyl classes of fixed lattices of subgroups of S_N.
    Classify { n: usize },
    /// Local unit indices of conductor-p orders.
    Eyext,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OutFormat {
    Json,
    Csv,
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let cfg = match &cli.config {
        Some(path) => Some(parse_config(&std::fs::read_to_string(path)?)?),
        None => None,
    };
    let cmd = match cli.command {
        Cmd::Delta => Command::Delta,
        Cmd::Disc => Command::Disc,
        Cmd::Verify => Command::Verify,
        Cmd::Classify { n } => Command::Classify(n),
        Cmd::Eyext => Command::Eyext,
    };
    let format = match cli.format {
        OutFormat::Json => Format::Json,
        OutFormat::Csv => Format::Csv,
    };
    let opts = Options { seed: cli.seed, budget: cli.budget, jobs: cli.jobs, ..Options::default() };
    let outcome = execute(&cmd, cfg.as_ref(), &opts, format)?;
    match &cli.out {
        Some(path) => std::fs::write(path, &outcome.output)?,
        None => std::io::stdout().write_all(outcome.output.as_bytes())?,
    }
    for d in &outcome.diagnostics {
        eprintln!("{d}");
    }
    Ok(outcome.verified)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
