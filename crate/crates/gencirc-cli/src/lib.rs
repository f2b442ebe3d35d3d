//! Command-line surface: instance format, deterministic document emission,
//! and the four command bodies. The binary in `main.rs` is a thin adapter
//! over these so integration tests can exercise everything in-process.

pub mod commands;
pub mod emit;
pub mod instance;

pub use commands::{cmd_bench, cmd_example, cmd_spectrum, cmd_verify, BenchConfig};
pub use emit::{fmt_real, report_json, spectrum_json, SpectrumDoc};
pub use instance::InstanceDocument;

/// Failure modes mapped onto the exit-code contract: usage and parse
/// problems exit 1, a failed verification exits 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Io(std::io::Error),
    Core(gencirc_core::Error),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
            CliError::Parse(msg) => write!(f, "parse: {msg}"),
            CliError::Io(e) => write!(f, "io: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Verification(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<gencirc_core::Error> for CliError {
    fn from(e: gencirc_core::Error) -> Self {
        CliError::Core(e)
    }
}
