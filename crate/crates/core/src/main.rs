use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use icis::cli::{parse_problem, run_command, Command, Format, RunOptions};
use icis::standard_basis::Budget;
use icis::Error;

#[derive(Parser)]
#[command(
    name = "icis",
    version,
    about = "Milnor numbers and mu-constancy on isolated complete intersection singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    /// Number of random parameter values sampled by family-check.
    #[arg(long, global = true, default_value_t = 3)]
    samples: usize,
    /// Seed for sampling and random linear combinations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum number of reduction steps per standard basis.
    #[arg(long, global = true)]
    budget_steps: Option<u64>,
    /// Wall-clock limit per standard basis, in seconds.
    #[arg(long, global = true)]
    budget_seconds: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Include per-phase wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Sub {
    /// Milnor numbers of f on X (at t = 0 for families).
    Milnor { problem: PathBuf },
    /// mu-constancy of a family by specialization.
    FamilyCheck { problem: PathBuf },
    /// Weighted-homogeneous and Newton-polyhedron certificates.
    Certify { problem: PathBuf },
    /// Valuations along the arcs of the problem file.
    ArcTest { problem: PathBuf },
    /// Newton polyhedron and non-degeneracy of the relative Jacobian ideal.
    Newton { problem: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

fn run(cli: Cli) -> Result<String, Error> {
    let (cmd, path) = match cli.command {
        Sub::Milnor { problem } => (Command::Milnor, problem),
        Sub::FamilyCheck { problem } => (Command::FamilyCheck, problem),
        Sub::Certify { problem } => (Command::Certify, problem),
        Sub::ArcTest { problem } => (Command::ArcTest, problem),
        Sub::Newton { problem } => (Command::Newton, problem),
    };
    let text =
        std::fs::read_to_string(&path).map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    let problem = parse_problem(&text)?;
    let mut budget = Budget::default();
    if let Some(s) = cli.budget_steps {
        budget.max_steps = s;
    }
    if let Some(s) = cli.budget_seconds {
        budget.max_time = Duration::from_secs(s);
    }
    let opts = RunOptions {
        samples: cli.samples,
        seed: cli.seed,
        budget,
        timings: cli.timings,
    };
    let format = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Text,
    };
    Ok(run_command(cmd, &problem, &opts)?.render(format))
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        let _ = e.print();
        std::process::exit(if e.use_stderr() { 1 } else { 0 });
    });
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
