//! Command-line interface: argument types and the command implementations.
//!
//! Every command writes its primary result to the given writer (standard
//! output in the binary) and its files under explicit paths. [`execute`]
//! returns whether all requested verifications passed, which the binary maps
//! to the exit status.

mod commands;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "bootstrap-lab",
    version,
    about = "Graph bootstrap percolation experiments"
)]
pub struct Cli {
    /// Worker threads for searches and Monte Carlo runs (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the H-process from a starting graph file.
    Run(RunArgs),
    /// Build a named construction and write its files.
    Construct(ConstructArgs),
    /// Exhaustive searches over all graphs on n vertices.
    Search(SearchArgs),
    /// One-line verdicts on rules, chains, sets and traces.
    Analyze(AnalyzeArgs),
    /// Monte Carlo percolation probabilities on G(n, p).
    Threshold(ThresholdArgs),
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Infection rule: a builtin such as "clique 4", a union "cycle 3 + cycle 4", or a graph file.
    #[arg(long)]
    pub rule: String,
    /// Starting graph in graph6 or edge-list format.
    #[arg(long)]
    pub start: PathBuf,
    #[arg(long)]
    pub max_rounds: Option<usize>,
    /// Where to write the trace document.
    #[arg(long)]
    pub trace_out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    K4Extremal,
    StarExtremal,
    Path,
    SimpleChain,
    CliqueChain,
    DilationK5,
    LadderK6,
    CheapPercolator,
    Gadget,
    Wrapper,
    GluedCliques,
    PendantStart,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub name: Construction,
    /// Directory receiving the output files.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    /// File stem; defaults to the construction name.
    #[arg(long)]
    pub stem: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub rule: Option<String>,
    /// Number of copies in a chain.
    #[arg(long)]
    pub length: Option<usize>,
    #[arg(long)]
    pub prime: Option<u64>,
    /// Explicit dilation set, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["auto_set", "sphere_set"])]
    pub set: Option<Vec<u64>>,
    /// Use the largest relation-free set found by exhaustive search.
    #[arg(long)]
    pub auto_set: bool,
    /// Use the sphere-layer set.
    #[arg(long, conflicts_with = "auto_set")]
    pub sphere_set: bool,
    #[arg(long, default_value_t = crate::arithmetic::DEFAULT_COEFF_BOUND)]
    pub coeff: u32,
    /// Ladder segment length.
    #[arg(long)]
    pub segment: Option<usize>,
    /// Number of ladder slopes.
    #[arg(long)]
    pub slopes: Option<usize>,
    #[arg(long)]
    pub window: Option<usize>,
    #[arg(long)]
    pub spacing: Option<usize>,
    /// Gadget distance threshold.
    #[arg(long, default_value_t = 1)]
    pub min_distance: usize,
    /// Largest chain length tried by the gadget parameter search.
    #[arg(long, default_value_t = 60)]
    pub max_length: usize,
    /// Size of the wrapper's independent set.
    #[arg(long)]
    pub independent: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub girth: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Chain conditions that must pass (dagger, dagger_prime, star).
    #[arg(long, value_delimiter = ',')]
    pub require: Vec<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    MaxTime,
    WeakSat,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    pub quantity: Quantity,
    #[arg(long)]
    pub rule: String,
    /// A vertex count or an inclusive range such as 4..7.
    #[arg(long)]
    pub n: String,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(subcommand)]
    pub property: Property,
}

#[derive(Subcommand, Debug)]
pub enum Property {
    /// Whether deleting at most l vertices and one edge keeps the rule connected.
    Inseparable {
        #[arg(long)]
        rule: String,
        #[arg(long, default_value_t = 2)]
        l: usize,
    },
    /// Whether every non-monochromatic edge colouring has a two- or three-run cycle.
    Behrendian {
        #[arg(long)]
        rule: String,
        #[arg(long, default_value_t = crate::analyzers::BEHRENDIAN_EDGE_CAP)]
        edge_cap: usize,
    },
    /// Vertex, edge and degree statistics of a rule.
    Stats {
        #[arg(long)]
        rule: String,
    },
    /// Chain conditions and round-exact replay of a chain document.
    Chain {
        #[arg(long)]
        chain: PathBuf,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "dagger,dagger_prime,star"
        )]
        conditions: Vec<String>,
    },
    /// Relation-freeness of a subset of Z_p.
    SolutionFree {
        #[arg(long)]
        prime: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<u64>,
        #[arg(long, default_value_t = crate::arithmetic::DEFAULT_COEFF_BOUND)]
        coeff: u32,
    },
    /// The odd-round extraction of a trace document is free of the rule.
    Alternating {
        #[arg(long)]
        trace: PathBuf,
        /// Rule override; defaults to the rule recorded in the trace.
        #[arg(long)]
        rule: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub rule: String,
    #[arg(long)]
    pub n: usize,
    /// Edge probabilities, comma separated.
    #[arg(long, value_delimiter = ',', required_unless_present = "center")]
    pub p: Vec<f64>,
    /// Centre of a geometric grid, used instead of --p.
    #[arg(long, conflicts_with = "p")]
    pub center: Option<f64>,
    /// Grid points; odd counts put the centre in the middle.
    #[arg(long, default_value_t = 7)]
    pub points: usize,
    /// Ratio between consecutive grid points; the default makes seven points
    /// span a factor of 3 on each side of the centre.
    #[arg(long, default_value_t = 3f64.cbrt())]
    pub ratio: f64,
    #[arg(long)]
    pub trials: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs a parsed command. `Ok(false)` means a requested verification failed
/// or the run was truncated.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let dispatch = |out: &mut dyn Write| match &cli.command {
        Command::Run(a) => commands::run(a, out),
        Command::Construct(a) => commands::construct(a, out),
        Command::Search(a) => commands::search(a, out),
        Command::Analyze(a) => commands::analyze(&a.property, out),
        Command::Threshold(a) => commands::threshold(a, out),
    };
    match cli.jobs {
        None => dispatch(out),
        Some(0) => Err(Error::Input("--jobs must be positive".into())),
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?;
            // The writer need not be Send, so output is buffered inside the pool.
            let mut buf = Vec::new();
            let verdict = pool.install(|| dispatch(&mut buf));
            out.write_all(&buf)?;
            verdict
        }
    }
}

/// Parses `args` (including the program name) and executes; returns the
/// process exit code. Diagnostics go to standard error.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
