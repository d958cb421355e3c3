//! Command-line front end for the census and stressed-word tools.
//!
//! Every subcommand produces one or more [`table::OutputTable`]s which are
//! rendered as CSV or JSON. Rows are emitted in ascending genus (then length)
//! order and contain no timing information, so identical invocations produce
//! identical bytes.

pub mod commands;
pub mod error;
pub mod ngfile;
pub mod table;

use std::path::PathBuf;

use clap::Parser;

pub use error::CliError;
use table::Format;

#[derive(Debug, Parser)]
#[command(name = "kunz", version, about = "Exact counts of numerical semigroups via Kunz words")]
pub struct Cli {
    #[command(subcommand)]
    pub command: commands::Command,

    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, env = "KUNZ_THREADS")]
    pub threads: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// Runs a parsed command line and writes its output.
pub fn execute(cli: &Cli) -> Result<(), CliError> {
    if cli.threads == Some(0) {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let tables = commands::run(&cli.command, cli.threads)?;
    let text = table::render(&tables, cli.format)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
