use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cslcolour_cli::{analyze_job, oracle_job, read_job, render_job, rotations_json, CliError, Mode};

#[derive(Parser)]
#[command(name = "cslcolour", version, about = "Coincidence site lattices and colour coincidences, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the index diagram and colour permutation of a job.
    Analyze {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the colouring as SVG.
    Render {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "parent")]
        mode: Mode,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the analysis against a brute-force window census.
    Oracle {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the coincidence rotations of Z² up to a denominator.
    GenRotations {
        #[arg(long)]
        max: u64,
    },
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { config, out } => {
            let report = analyze_job(&read_job(&config)?)?;
            emit(&report.to_json(), out.as_deref())
        }
        Command::Render { config, mode, out } => {
            let svg = render_job(&read_job(&config)?, mode)?;
            emit(&svg, Some(&out))
        }
        Command::Oracle { config, out } => {
            let (report, failure) = oracle_job(&read_job(&config)?)?;
            emit(&report.to_json(), out.as_deref())?;
            failure.map_or(Ok(()), Err)
        }
        Command::GenRotations { max } => emit(&rotations_json(max)?, None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Config(e.to_string().trim_end().to_string());
            eprintln!("{}", err.to_json());
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
