//! `powerful`: command-line access to the powerful-set toolkit.
//!
//! Exit codes: 0 when the command succeeds and every requested check holds,
//! 1 when a check fails (not powerful, rejected clutter, table mismatch,
//! counterexample found), 2 on usage, parse or resource errors.

mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "powerful",
    version,
    about = "Verify, transform, reconstruct and enumerate powerful sets"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a set for powerfulness and describe it.
    Check { file: PathBuf },

    /// Rank of every coordinate subset, or of the subsets given with --x.
    Rank {
        file: PathBuf,
        /// Coordinate subset such as `1,3`; repeatable.
        #[arg(long = "x", value_name = "ELEMENTS")]
        subsets: Vec<String>,
    },

    /// Apply one operation and print the resulting set.
    Op {
        #[arg(value_enum)]
        operation: Operation,
        files: Vec<PathBuf>,
        /// Element for contract, delete, puncture and parallel extensions.
        #[arg(long)]
        element: Option<usize>,
        /// Extension kind for `extend`.
        #[arg(long, value_enum)]
        kind: Option<ExtensionKind>,
        /// Partner word for near-frame extensions.
        #[arg(long)]
        partner: Option<String>,
        /// Also test the result for powerfulness.
        #[arg(long)]
        verify: bool,
    },

    /// Count isomorphism classes of powerful sets of one order.
    Census {
        #[arg(long)]
        order: usize,
        /// Read the classes from this file if present, otherwise write them there.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Allow the order-6 census.
        #[arg(long)]
        extended: bool,
        /// Compare against the published table and fail on mismatch.
        #[arg(long)]
        expect_paper: bool,
        /// Print the class representatives.
        #[arg(long)]
        reps: bool,
    },

    /// Rebuild the powerful set whose minimal nonzero members are listed.
    Reconstruct {
        file: PathBuf,
        /// Order of the ground set; required for an empty clutter.
        #[arg(long)]
        order: Option<usize>,
    },

    /// Search all classes of one order for counterexamples.
    Conjecture {
        #[arg(value_enum)]
        which: Conjecture,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        extended: bool,
    },

    /// Grow a diamond family and check its members.
    Family {
        /// Seed sets; defaults to the two built-in order-5 seeds.
        seeds: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        rounds: usize,
        #[arg(long)]
        members: bool,
    },

    /// Gray-map a Z4 code to a binary code.
    Graymap {
        file: PathBuf,
        /// Test the image for powerfulness.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Operation {
    Contract,
    Delete,
    Puncture,
    Extend,
    DirectSum,
    MutualFraming,
    Bullet,
    Diamond,
    Closure,
    Canon,
    Min,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtensionKind {
    Loop,
    Coloop,
    Frame,
    NearFrame,
    Star,
    Parallel,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conjecture {
    Coloop,
    Projection,
}

/// A command-level failure: reported on stderr with exit code 2.
#[derive(Debug)]
struct Failure(String);

impl From<powerful::Error> for Failure {
    fn from(e: powerful::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure(e)
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
