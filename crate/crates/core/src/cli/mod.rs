//! The `ssc` command line.
//!
//! [`run`] parses arguments, runs one command and returns the exit code
//! together with everything destined for standard output and standard
//! error, so the binary is a thin wrapper and tests can drive it directly.

mod commands;
mod render;
mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;

pub use verify::{build_report_for, Claim, ClaimVerdict, CommandInfo, RunReport, Summary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ssc",
    version,
    about = "Spanning simplicial complexes of graphs"
)]
struct Cli {
    #[command(subcommand)]
    target: Target,
}

#[derive(Subcommand, Debug)]
enum Target {
    /// The Jahangir graph J(n,m).
    Jahangir {
        #[arg(long)]
        m: usize,
        /// Only 2 is supported.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        common: Common,
        #[command(subcommand)]
        command: Command,
    },
    /// A graph read from a JSON edge-list file.
    Graph {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
        #[command(subcommand)]
        command: Command,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Tie-break seed for ordering search; 0 keeps the canonical order.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Add wall-clock timings to `verify` reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Spanning trees, as edge sets.
    Facets,
    /// Spanning trees of J(2,m) by cutting-down class.
    Classes,
    /// A cycle catalog.
    Cycles {
        /// Defaults to `paper` for Jahangir graphs and `oracle` otherwise.
        #[arg(long, value_enum)]
        catalog: Option<Catalog>,
    },
    /// The f-vector of the spanning complex.
    FVector {
        #[arg(long, value_enum, default_value_t = FMode::Direct)]
        mode: FMode,
    },
    /// The Hilbert series of the face ring.
    Hilbert {
        #[arg(long, value_enum, default_value_t = FMode::Direct)]
        mode: FMode,
        /// Also list the Hilbert function at 0..TERMS.
        #[arg(long, default_value_t = 0)]
        terms: usize,
    },
    /// Cohen–Macaulay verdict via quasi-linear quotients.
    Cm {
        /// Defaults to `paper` for Jahangir graphs and `search` otherwise.
        #[arg(long, value_enum)]
        ordering: Option<Ordering>,
    },
    /// Cross-check every claim against its oracle.
    Verify,
    /// The graph as a JSON edge-list document.
    EmitGraph,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Catalog {
    Paper,
    Oracle,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FMode {
    Direct,
    Paper,
    PaperPairwise,
    ExactIe,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ordering {
    Paper,
    Search,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult<T> = std::result::Result<T, Failure>;

/// What a command hands back: the document and whether `verify` found a
/// mismatch.
struct Document {
    body: String,
    mismatch: bool,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli) {
        Ok(doc) => Outcome {
            code: if doc.mismatch { EXIT_MISMATCH } else { EXIT_OK },
            stdout: doc.body,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Lib(e)) => Outcome {
            code: match e {
                Error::Capacity(_) => EXIT_CAPACITY,
                _ => EXIT_USAGE,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cli: Cli) -> CmdResult<Document> {
    match cli.target {
        Target::Jahangir {
            m,
            n,
            common,
            command,
        } => {
            if n != 2 {
                return Err(Failure::Usage(format!(
                    "only n = 2 is supported, got --n {n}"
                )));
            }
            let shape = crate::graph::JahangirShape::new(m)?;
            let ctx = commands::Context {
                graph: shape.graph(),
                jahangir: Some(m),
                name: format!("J(2,{m})"),
                format: common.format,
                seed: common.seed,
                timings: common.timings,
            };
            commands::execute(&ctx, command)
        }
        Target::Graph {
            input,
            common,
            command,
        } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.display())))?;
            let graph = crate::graph::parse_graph(&text)?;
            let ctx = commands::Context {
                graph,
                jahangir: None,
                name: input.display().to_string(),
                format: common.format,
                seed: common.seed,
                timings: common.timings,
            };
            commands::execute(&ctx, command)
        }
    }
}
