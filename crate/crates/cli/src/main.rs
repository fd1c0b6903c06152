//! `twofactor`: analyse single graphs and check existence statements over graph6 corpora.
//!
//! Exit codes: 0 definitive verdict, 1 definitive negative answer to a
//! predicate or a failed verification, 2 usage or input error, 3 inconclusive
//! (a search bound was exceeded).

mod commands;
mod input;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twofactor::barrier::DEFAULT_BARRIER_BOUND;
use twofactor::constructive::{SearchBounds, DEFAULT_CUT_SET_BOUND, DEFAULT_HAMILTON_BOUND};
use twofactor::independence::Slack;
use twofactor::two_factor::DEFAULT_ORACLE_BOUND;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "twofactor", version, about = "Decide, construct and certify 2-factors of simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Input file: `.g6` for graph6, `.el` for an edge list. Reads standard
    /// input when absent.
    #[arg(long = "in", value_name = "FILE")]
    pub path: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Bounds {
    /// Largest graph handed to a Hamiltonicity search.
    #[arg(long, default_value_t = DEFAULT_HAMILTON_BOUND)]
    pub hamilton_bound: usize,
    /// Largest cut set considered by the cut-set construction.
    #[arg(long, default_value_t = DEFAULT_CUT_SET_BOUND)]
    pub cut_set_bound: usize,
    /// Largest graph searched exhaustively for barriers.
    #[arg(long, default_value_t = DEFAULT_BARRIER_BOUND)]
    pub barrier_bound: usize,
}

impl Bounds {
    pub fn search(&self) -> SearchBounds {
        SearchBounds { hamilton: self.hamilton_bound, cut_set: self.cut_set_bound }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Condition {
    Strict,
    Weak,
}

impl From<Condition> for Slack {
    fn from(c: Condition) -> Slack {
        match c {
            Condition::Strict => Slack::Strict,
            Condition::Weak => Slack::Weak,
        }
    }
}

/// The statement `verify-corpus` checks on each graph.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Theorem {
    /// Strict slack condition implies a 2-factor, built vertex by vertex.
    #[value(name = "3")]
    #[serde(rename = "3")]
    StrictSlack,
    /// Weak slack condition implies a 2-factor or membership in the
    /// exceptional family.
    #[value(name = "4")]
    #[serde(rename = "4")]
    WeakSlack,
    /// Degree-sum bound, strict slack and a large cut set give at most `k`
    /// cycles.
    #[value(name = "8")]
    #[serde(rename = "8")]
    KCycles,
    /// Degree-sum bound and strict slack give at most two cycles.
    #[value(name = "cor13")]
    #[serde(rename = "cor13")]
    TwoCycles,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the slack condition |I| <= δ_G(I) - c on every independent set.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Condition::Strict)]
        condition: Condition,
        /// Also report the Dirac and Chvátal–Erdős conditions on standard error.
        #[arg(long)]
        classical: bool,
    },
    /// Find a 2-factor, or a barrier proving there is none.
    TwoFactor {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_BARRIER_BOUND)]
        barrier_bound: usize,
    },
    /// A 2-factor with the fewest cycles, by exhaustive search.
    MinCycles {
        #[command(flatten)]
        input: Input,
        /// Vertex ceiling; defaults to TWOFACTOR_ORACLE_BOUND or 16.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Search for a barrier (S, T) with deficiency at most -2.
    Barrier {
        #[command(flatten)]
        input: Input,
        /// Minimize |S ∪ T|.
        #[arg(long)]
        minimal: bool,
        #[arg(long, default_value_t = DEFAULT_BARRIER_BOUND)]
        bound: usize,
    },
    /// A 2-factor with at most k cycles through the cut-set construction.
    KCycles {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// A 2-factor with at most two cycles.
    TwoCycles {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Print generated graphs in graph6, one per line.
    Generate {
        /// Member of the exceptional family with parameter ell.
        #[arg(long, value_name = "ELL", conflicts_with_all = ["tightness", "connected"])]
        family: Option<usize>,
        /// Core graph (graph6) for --family; defaults to the edgeless graph.
        #[arg(long, requires = "family", value_name = "GRAPH6")]
        core: Option<String>,
        /// The sharpness example for parameter k.
        #[arg(long, value_name = "K", conflicts_with = "connected")]
        tightness: Option<usize>,
        /// Every connected graph on N vertices, up to isomorphism.
        #[arg(long, value_name = "N")]
        connected: Option<usize>,
    },
    /// Recognize membership in the exceptional family.
    Recognize {
        #[command(flatten)]
        input: Input,
    },
    /// Check a statement on every graph of a graph6 stream.
    VerifyCorpus {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Cycle bound used with `--theorem 8`.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Cross-check conclusions against the brute-force oracles.
        #[arg(long)]
        with_oracle: bool,
        /// List every graph in the report, not only failures.
        #[arg(long)]
        all_verdicts: bool,
        #[command(flatten)]
        bounds: Bounds,
    },
}

/// Writes to standard output, reporting a closed pipe as an error instead of
/// panicking.
pub fn out(text: &str) -> anyhow::Result<()> {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(text.as_bytes())?;
    stdout.flush()?;
    Ok(())
}

/// Vertex ceiling for exhaustive oracles: `TWOFACTOR_ORACLE_BOUND` or 16.
pub fn oracle_bound() -> Result<usize, String> {
    match std::env::var("TWOFACTOR_ORACLE_BOUND") {
        Ok(v) => v.trim().parse().map_err(|_| format!("TWOFACTOR_ORACLE_BOUND must be a count, got {v:?}")),
        Err(_) => Ok(DEFAULT_ORACLE_BOUND),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { input, condition, classical } => commands::check(&input, condition.into(), classical),
        Command::TwoFactor { input, barrier_bound } => commands::two_factor(&input, barrier_bound),
        Command::MinCycles { input, limit } => commands::min_cycles(&input, limit),
        Command::Barrier { input, minimal, bound } => commands::barrier(&input, minimal, bound),
        Command::KCycles { input, k, bounds } => commands::k_cycles(&input, Some(k), bounds),
        Command::TwoCycles { input, bounds } => commands::k_cycles(&input, None, bounds),
        Command::Generate { family, core, tightness, connected } => commands::generate(family, core, tightness, connected),
        Command::Recognize { input } => commands::recognize(&input),
        Command::VerifyCorpus { input, theorem, k, jobs, with_oracle, all_verdicts, bounds } => {
            verify::run(&input, verify::Options { theorem, k, jobs, with_oracle, all_verdicts, bounds })
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
