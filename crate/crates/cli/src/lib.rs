//! Command-line driver for the pointed categorical-extension toolkit.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub mod commands;
pub mod file;
pub mod render;

pub use commands::Outcome;
pub use render::Format;

#[derive(Debug, Parser)]
#[command(name = "cext", version, about = "Exact checks for pointed braided categories and their extensions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a category file.
    Verify {
        path: PathBuf,
        /// Re-emit the parsed category to this path.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Build and validate the category of an even lattice.
    Lattice {
        /// Gram matrix, e.g. "2 -1; -1 2", or a file path.
        #[arg(long)]
        gram: String,
        /// Write the category file here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Weights and twists of a unitary minimal model.
    MinimalModel {
        #[arg(long)]
        m: i64,
    },
    /// Axiom suite and seeded random-word suite of the word calculus.
    Catext {
        #[arg(long)]
        gram: String,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Statistics operators against the braiding.
    Dhr {
        #[arg(long)]
        gram: String,
        #[arg(long, default_value_t = 10)]
        transports: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

pub fn run(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Verify { path, emit } => commands::verify(path, emit.as_deref(), f),
        Command::Lattice { gram, emit } => commands::lattice(gram, emit.as_deref(), f),
        Command::MinimalModel { m } => commands::minimal(*m, f),
        Command::Catext { gram, max_len, trials, seed } => commands::catext(gram, *max_len, *trials, *seed, f),
        Command::Dhr { gram, transports, seed } => commands::dhr(gram, *transports, *seed, f),
    }
}

/// Parses arguments and runs. Usage errors exit with code 2.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { commands::EXIT_INPUT } else { commands::EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            }
        }
    }
}
