use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "matfree",
    version,
    about = "Strongly chordal graphs and MAT-labelings"
)]
pub struct Cli {
    /// Input format for graph files; `auto` goes by extension, then content.
    #[arg(long, value_enum, default_value_t = Format::Auto, global = true)]
    pub format: Format,

    /// Human-readable summary on stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Auto,
    Edges,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chordal, strongly chordal and unit interval tests with witnesses.
    Classify(InputArgs),
    /// Build a MAT-labeling of a strongly chordal graph.
    Label(LabelArgs),
    /// Check a labeling against ML1-ML3.
    Verify(VerifyArgs),
    /// Exponents from a labeling or a perfect elimination ordering.
    Exponents(ExponentsArgs),
    /// Clique intersection poset as JSON or DOT.
    Poset(PosetArgs),
    /// Compare recognizers, constructor and brute force on random graphs.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file (`-` for stdin).
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct LabelArgs {
    pub input: PathBuf,
    /// Write the labeling here instead of stdout.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Also write a DOT drawing with edges coloured by label.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Emit::Labeling)]
    pub emit: Emit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    /// The labeling only.
    Labeling,
    /// The labeling plus gluing order and exponents after each step.
    Trace,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    /// Labeling as JSON or `u v label` lines.
    pub labeling: PathBuf,
}

#[derive(Debug, Args)]
pub struct ExponentsArgs {
    pub graph: PathBuf,
    pub labeling: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PosetArgs {
    pub input: PathBuf,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Emit DOT instead of JSON.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random graphs.
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    /// Skip brute force on graphs with more edges than this.
    #[arg(long, default_value_t = 18)]
    pub max_brute_edges: usize,
    /// Largest graph order sampled.
    #[arg(long, default_value_t = 8)]
    pub max_vertices: u32,
}
