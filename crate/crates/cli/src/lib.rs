//! Command-line front end for `chanmetric`.
//!
//! [`run`] parses arguments, dispatches to the library, and returns the
//! exit code with the text it would print. Exit codes: 0 success, 2 channel
//! not metrizable, 1 usage, parse, or validation error.

mod commands;
pub mod format;

use std::ffi::OsString;
use std::path::PathBuf;

use chanmetric::metrization::Mode;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

pub use commands::Outcome;

#[derive(Debug, Parser)]
#[command(name = "chanmetric", version, about = "Channel metrization and Hamming cube embeddings")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Distance,
    Channel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Channel,
    Distance,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Column-wise dense rank matrix of a square matrix.
    #[command(group(ArgGroup::new("direction").required(true).args(["asc", "desc"])))]
    Order {
        file: PathBuf,
        #[arg(long)]
        asc: bool,
        #[arg(long)]
        desc: bool,
    },
    /// Find a distance matched to a channel, or a certificate that none exists.
    Metrize {
        channel: PathBuf,
        #[arg(long, default_value = "distance", value_parser = parse_mode)]
        mode: Mode,
    },
    /// Decide decoding equivalence of two matrices.
    Equiv {
        a: PathBuf,
        b: PathBuf,
        #[arg(long = "as", value_enum)]
        kind: MatrixKind,
    },
    /// Decide whether a channel and a distance are matched.
    Matched {
        channel: PathBuf,
        distance: PathBuf,
        /// Also compare both decoders on every code.
        #[arg(long)]
        oracle: bool,
    },
    /// Set-pattern tools.
    Setpattern {
        #[command(subcommand)]
        action: SetpatternAction,
    },
    /// Embed a weight (linearly) or a distance (pointwise) into a Hamming cube.
    #[command(group(ArgGroup::new("source").required(true).args(["weight", "distance"])))]
    Embed {
        #[arg(long)]
        weight: Option<PathBuf>,
        #[arg(long)]
        distance: Option<PathBuf>,
        /// Smallest dimension up to decoding equivalence.
        #[arg(long, conflicts_with_all = ["scale", "shift"])]
        minimal: bool,
        /// Explicit multiplier `m` of the minterm vector (with --shift).
        #[arg(long, requires = "shift", requires = "weight")]
        scale: Option<String>,
        /// Explicit shift `r` added to every minterm (with --scale).
        #[arg(long, requires = "scale")]
        shift: Option<String>,
    },
    /// Check an embedding file against a weight or distance file.
    VerifyEmbed { embedding: PathBuf, target: PathBuf },
    /// Reproducible random test data.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SetpatternAction {
    /// Solve a full pattern and decide realizability.
    #[command(group(ArgGroup::new("pattern").required(true).args(["cap", "sym"])))]
    Solve {
        #[arg(long)]
        cap: bool,
        #[arg(long)]
        sym: bool,
        file: PathBuf,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => commands::execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::failure(text)
            } else {
                Outcome::success(text)
            }
        }
    }
}
