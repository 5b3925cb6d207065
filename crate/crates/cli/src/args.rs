use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use qtanner::code::DEFAULT_CAP;

#[derive(Parser, Debug)]
#[command(name = "qtanner", version, about = "Quantum Tanner codes from commuting Schreier graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,

    /// Directory for artifacts; also receives `report.json` when given.
    #[arg(long, global = true)]
    pub output_dir: Option<PathBuf>,

    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for the exact distance search.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    /// Largest code dimension enumerated exhaustively.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,

    /// Enumerate even above `--cap`.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Build or inspect a single Schreier graph.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Checks on a pair of graph specs.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Square complex of a pair.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Quantum Tanner code of a pair.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Checks on a pair of square graphs with an edge bijection.
    #[command(subcommand)]
    Characterize(CharCmd),
    /// Built-in examples.
    #[command(subcommand)]
    Example(ExampleCmd),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub enum GraphCmd {
    /// Cayley graph of a cyclic or dihedral group.
    Build {
        /// `cyclic:N` or `dihedral:N` (order 2N, element `k + N f` is `r^k s^f`).
        #[arg(long)]
        group: String,
        /// Generator multiset, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<usize>,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        /// Emit the bipartite double cover instead.
        #[arg(long)]
        cover: bool,
        /// Artifact file name.
        #[arg(long, default_value = "graph.json")]
        name: String,
    },
    /// Degree, components, bipartiteness and spectrum.
    Inspect { spec: PathBuf },
}

#[derive(Args, Debug)]
pub struct PairArgs {
    /// Graph spec of A.
    pub a: PathBuf,
    /// Graph spec of B.
    pub b: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum CheckKind {
    Commute,
    Overlap,
    Bipartite,
    Pairs,
    Ramanujan,
    Spectrum,
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    Commute(PairArgs),
    Overlap(PairArgs),
    /// Both graphs bipartite on one partition (A's, else B's, else a 2-coloring of A).
    Bipartite(PairArgs),
    /// Inverse-label pairs agree along edges of the other graph.
    Pairs(PairArgs),
    /// Every listed graph is Ramanujan.
    Ramanujan {
        #[arg(required = true)]
        specs: Vec<PathBuf>,
    },
    /// Joint spectrum of the pair and the square-graph bound.
    Spectrum(PairArgs),
}

#[derive(Subcommand, Debug)]
pub enum ComplexCmd {
    /// Writes `complex.json` and `squares.json`.
    Build(PairArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct LocalArgs {
    /// Local code for both sides: `rep<n>`, `spc<n>`, `full<n>`, `zero<n>` or `parity:<rows>` (e.g. `parity:110,011`).
    #[arg(long)]
    pub local: Option<String>,
    /// Local code of the A side; overrides `--local`.
    #[arg(long)]
    pub local_a: Option<String>,
    /// Local code of the B side; overrides `--local`.
    #[arg(long)]
    pub local_b: Option<String>,
    /// Random information-set trials for distance upper bounds (0 = skip).
    #[arg(long, default_value_t = 0)]
    pub trials: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum CodeKind {
    Build,
    Distance,
    ExportAlist,
    Report,
}

#[derive(Subcommand, Debug)]
pub enum CodeCmd {
    /// Parameters plus `h0.alist` and `h1.alist`.
    Build(CodeArgs),
    /// Exact distances; budget error above `--cap` unless `--force`.
    Distance(CodeArgs),
    /// Only the alist files.
    ExportAlist(CodeArgs),
    /// Parameters, row/column weights and distances (capped).
    Report(CodeArgs),
}

#[derive(Args, Debug)]
pub struct CodeArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[command(flatten)]
    pub local: LocalArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum CharKind {
    Ii,
    Swap,
    Reconstruct,
    GeneralCss,
}

#[derive(Subcommand, Debug)]
pub enum CharCmd {
    /// Every overlap of ψ(E0(v)) with E1(w) is whole rows or whole columns.
    Ii { squares: PathBuf },
    /// Kept labels share indices.
    Swap { squares: PathBuf },
    /// Rebuild a Schreier pair; writes `a.json` and `b.json`.
    Reconstruct { squares: PathBuf },
    /// Parity checks of the generalized code and their orthogonality.
    GeneralCss {
        squares: PathBuf,
        #[command(flatten)]
        local: LocalArgs,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("action").multiple(false)))]
pub struct ExampleArgs {
    #[arg(long, value_enum, group = "action")]
    pub check: Option<CheckKind>,
    #[arg(long, value_enum, group = "action")]
    pub characterize: Option<CharKind>,
    #[arg(long, value_enum, group = "action")]
    pub code: Option<CodeKind>,
    /// Build the square complex.
    #[arg(long, group = "action")]
    pub complex: bool,
    #[command(flatten)]
    pub local: LocalArgs,
}

#[derive(Subcommand, Debug)]
pub enum ExampleCmd {
    /// Petersen graph with the two-pentagon graph; complex and code
    /// actions use the 40-vertex remedied pair.
    Petersen(ExampleArgs),
    /// Square graph where condition (ii) holds but the swap condition fails.
    RedNonempty(ExampleArgs),
    /// Double covers of Cay(Z_m, {1, m-1}) and Cay(Z_m, {2, m-2}).
    Cyclic {
        m: usize,
        #[command(flatten)]
        args: ExampleArgs,
    },
}
