//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 length guard.

mod commands;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

/// Largest word the oracle is run on.
pub const ORACLE_LIMIT: u64 = 100_000;

#[derive(Parser, Debug)]
#[command(name = "sturmian", version, about = "Runs of finite Sturmian words")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print S_n for a defining sequence.
    Generate {
        #[arg(long)]
        pi: String,
        /// Print only |S_n|.
        #[arg(long)]
        length: bool,
    },
    /// List the runs of S_n sorted by (start, period).
    Runs {
        #[arg(long)]
        pi: String,
        #[arg(long, value_enum, default_value_t = Method::Theorem)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the level-by-level results with the oracle.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Integer index of S_n.
    Index {
        #[arg(long)]
        pi: String,
        #[arg(long, value_enum, default_value_t = IndexMethod::Both)]
        method: IndexMethod,
    },
    /// Run counts: distinct-run recurrences and occurrence counts against the oracle.
    Count {
        #[arg(long)]
        pi: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The nested expression of S_n and its value.
    Eta {
        #[arg(long)]
        pi: String,
        /// Print symbols p_i, p'_i instead of numbers.
        #[arg(long)]
        symbolic: bool,
    },
}

#[derive(Args, Debug)]
pub struct CorpusArgs {
    /// A single defining sequence.
    #[arg(long, conflicts_with = "random")]
    pub pi: Option<String>,
    /// Number of random sequences.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub max_p: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cap on |S_n| for random sequences.
    #[arg(long, default_value_t = 20_000)]
    pub max_len: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Theorem,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IndexMethod {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::GuardExceeded { .. } | Error::Overflow => EXIT_GUARD,
        _ => EXIT_INVALID,
    }
}

/// Parses the process arguments and runs the command.
pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    run_command(cli.command)
}

pub fn run_command(cmd: Command) -> u8 {
    match commands::dispatch(cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
