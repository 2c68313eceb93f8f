//! `paraug`: command-line front end.
//!
//! Exit codes: 0 success or feasible, 1 well-formed but infeasible,
//! 2 input error, 3 budget exceeded.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use paraug::reduction::Variant;
use paraug::Error;

#[derive(Parser)]
#[command(
    name = "paraug",
    version,
    about = "Plane graph augmentation under parity constraints"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Budget {
    /// Backtracking nodes before the oracle gives up.
    #[arg(long, default_value_t = 200_000_000)]
    pub node_limit: u64,
    /// Largest instance the oracle accepts.
    #[arg(long, default_value_t = 64)]
    pub max_vertices: usize,
    /// Largest number of candidate edges the oracle accepts.
    #[arg(long, default_value_t = 512)]
    pub max_candidates: usize,
}

#[derive(Subcommand)]
pub enum Command {
    /// Decide augmentability of a MOP instance and print the witness.
    Check { instance: PathBuf },
    /// Minimum augmentation of a MOP instance.
    Min {
        instance: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compile a planar CNF file into a gadget instance.
    Reduce {
        cnf: PathBuf,
        #[arg(long, default_value = "decision")]
        variant: Variant,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Satisfying assignment to turn into an augmentation, e.g. TTFT.
        #[arg(long)]
        assignment: Option<String>,
        /// Where to write the augmentation of `--assignment`.
        #[arg(long)]
        aug_out: Option<PathBuf>,
    },
    /// Write random MOP instances with random even colorings.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Vertex count or inclusive range such as 6..10.
        #[arg(long, default_value = "8")]
        n: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Plane matching on the red vertices of a MOP instance.
    Match {
        instance: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Star from a degree-two vertex to all red vertices but at most two.
    Star {
        instance: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive minimum for a MOP or geometric instance.
    Oracle {
        instance: PathBuf,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All inclusion-minimal augmentations inside some faces of a plane
    /// instance.
    Enumerate {
        instance: PathBuf,
        /// Face ids (1-based, `faces()` order); all faces longer than three
        /// when absent.
        #[arg(long, value_delimiter = ',')]
        faces: Vec<usize>,
        /// Vertices whose parity is left open (1-based).
        #[arg(long, value_delimiter = ',')]
        free: Vec<usize>,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pentagon family instance, optionally certified by the oracle.
    Pentagon {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        certify: bool,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum T-join in the graph of an instance.
    Tjoin {
        instance: PathBuf,
        /// Vertices of T (1-based).
        #[arg(long, value_delimiter = ',')]
        t: Vec<usize>,
    },
    /// Tutte drawing of a 3-connected plane instance.
    Embed {
        instance: PathBuf,
        /// Outer face id (1-based); a longest face when absent.
        #[arg(long)]
        outer_face: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SVG drawing of an instance and an optional augmentation.
    Render {
        instance: PathBuf,
        #[arg(long)]
        aug: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Whether closing a straight-line path forces a crossing.
    PathEuler { instance: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded(_) => 3,
                _ => 2,
            })
        }
    }
}
