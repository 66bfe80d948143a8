// SPDX-License-Identifier: Apache-2.0

//! `pxk`: compute, bound, construct and certify k-proper colorings of small
//! graphs.
//!
//! Data goes to stdout (or `--output`); diagnostics go to stderr. Exit codes:
//! 0 success, 1 invalid input/certificate or failed check, 2 usage error,
//! 3 size-cap refusal.

mod commands;
mod io;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pxk::characterize::KSelection;
use pxk::constructions::SnppVariant;

#[derive(Parser)]
#[command(name = "pxk", version, about = "k-proper index of small graphs")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct Common {
    /// k, or a range such as `3..5` or `3..n` (n is each graph's order).
    #[arg(long, global = true, default_value = "3")]
    pub k: KArg,
    /// graph6 file, one graph per line; `-` reads stdin.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,
    /// Write data here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: one per CPU). Output does not depend on it.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Past the exact-solve size cap, print bounds instead of refusing.
    #[arg(long, global = true)]
    pub force_heuristic_bounds: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug)]
pub struct KArg(pub KSelection);

impl FromStr for KArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid k {t:?}"));
        let sel = match s.split_once("..") {
            None => KSelection::single(num(s)?),
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                let to = if hi.trim() == "n" { None } else { Some(num(hi)?) };
                KSelection { from: num(lo)?, to }
            }
        };
        if sel.from < 2 || sel.to.is_some_and(|t| t < sel.from) {
            return Err(format!("k range {s:?} is empty or starts below 2"));
        }
        Ok(KArg(sel))
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Exact px_k with a certificate.
    Compute,
    /// Exact rx_k with a certificate.
    Rainbow,
    /// Every lower and upper bound with its provenance.
    Bounds,
    /// Build a coloring by a fixed strategy and verify it.
    Color {
        #[arg(long, value_enum)]
        strategy: Strategy,
    },
    /// Check a certificate produced by `compute` or `rainbow`.
    Verify {
        #[arg(long)]
        certificate: String,
        /// Do not re-run the recorded palette searches.
        #[arg(long)]
        skip_exhaustion: bool,
    },
    /// Closed-form verdict for the largest index values.
    Classify,
    /// Emit a named graph as graph6.
    Construct(ConstructArgs),
    /// Solve every input graph and check every applicable claim.
    Survey {
        /// Also solve rx_k.
        #[arg(long)]
        rainbow: bool,
        /// Re-run every certificate's palette searches.
        #[arg(long)]
        recheck: bool,
        /// Skip graphs already recorded in `--output` and append the rest.
        #[arg(long)]
        resume: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Traceable,
    Tree,
    Unicyclic,
    Snpp,
}

#[derive(Args)]
pub struct ConstructArgs {
    #[arg(long, value_parser = pxk::constructions::FAMILY_TAGS)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// independence-tree: maximum degree.
    #[arg(long)]
    pub a: Option<usize>,
    /// independence-tree: number of edges.
    #[arg(long)]
    pub b: Option<usize>,
    /// star-plus-plus: placement of the second added edge.
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// unicyclic-broom-variant: 1, 2 or 3; all three when omitted.
    #[arg(long)]
    pub index: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Disjoint,
    Sharing,
}

impl From<VariantArg> for SnppVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Disjoint => SnppVariant::Disjoint,
            VariantArg::Sharing => SnppVariant::Sharing,
        }
    }
}

/// Exit status with the message that goes to stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub const EXIT_INVALID: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_SIZE_CAP: u8 = 3;

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<pxk::Error> for Failure {
    fn from(e: pxk::Error) -> Self {
        let code = match &e {
            e if e.is_size_cap() => EXIT_SIZE_CAP,
            pxk::Error::InvalidK { .. } | pxk::Error::InvalidFamily(_) => EXIT_USAGE,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_INVALID, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.common.workers {
        if w == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global().expect("pool is built once");
    }
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
