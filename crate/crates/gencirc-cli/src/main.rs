//! Binary shell: argument parsing, stream plumbing, exit-code mapping.
//! Exit codes: 0 success, 1 usage or parse error, 2 verification failure.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use gencirc_cli::commands::{self, BenchConfig};
use gencirc_cli::CliError;
use gencirc_core::SampleCase;

#[derive(Parser)]
#[command(
    name = "gencirc",
    version,
    about = "Closed-form spectra of weighted-shift matrix polynomials, with brute-force certification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Instance document to read (default: standard input)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Where to write the result (default: standard output)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Relative residual tolerance
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the closed-form spectrum of an instance
    Spectrum {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Certify a spectrum against dense brute force (exit 2 on failure)
    Verify {
        #[command(flatten)]
        io: IoArgs,
        /// Re-check a previously emitted spectrum document instead of
        /// recomputing the decomposition
        #[arg(long)]
        spectrum: Option<PathBuf>,
    },
    /// Time the closed-form path against the dense oracle (CSV output)
    Bench {
        /// Comma-separated list of sizes, each >= 2
        #[arg(long, value_delimiter = ',', required = true)]
        m_list: Vec<usize>,
        /// Structural case: s1, coprime, divisor, general-orbit
        #[arg(long, default_value = "coprime")]
        case: String,
        /// Instances per size
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Seed for instance generation (content is deterministic given this)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest m for which the dense oracle column is timed
        #[arg(long, default_value_t = 512)]
        oracle_cap: usize,
        /// Relative residual tolerance
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Where to write the CSV (default: standard output)
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit a named built-in example instance
    Example {
        /// One of: demo-3x3, demo-5x5-s2, demo-9x9-s3
        name: String,
        /// Where to write the instance (default: standard output)
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => Ok(std::fs::read_to_string(p)?),
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    Ok(std::fs::read_to_string(path)?)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum { io } => {
            let input = read_input(&io.input)?;
            let mut out = String::new();
            commands::cmd_spectrum(&input, &mut out)?;
            write_output(&io.output, &out)
        }
        Command::Verify { io, spectrum } => {
            let input = read_input(&io.input)?;
            let cached = match &spectrum {
                Some(p) => Some(read_file(p)?),
                None => None,
            };
            let mut out = String::new();
            let result = commands::cmd_verify(&input, cached.as_deref(), io.tol, &mut out);
            // the report is written even when verification fails
            write_output(&io.output, &out)?;
            result
        }
        Command::Bench {
            m_list,
            case,
            trials,
            seed,
            oracle_cap,
            tol,
            output,
        } => {
            let case = SampleCase::parse(&case).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown case {case:?}; available: s1, coprime, divisor, general-orbit"
                ))
            })?;
            let config = BenchConfig {
                m_list,
                case,
                trials,
                seed,
                oracle_cap,
                tol,
            };
            let mut out = String::new();
            commands::cmd_bench(&config, &mut out)?;
            write_output(&output, &out)
        }
        Command::Example { name, output } => {
            let mut out = String::new();
            commands::cmd_example(&name, &mut out)?;
            write_output(&output, &out)
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version are successful exits; everything else is usage
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
