use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crw_spectra::verify::DEFAULT_SEED;
use crw_spectra::{TOL_IDENTITY, TOL_SPECTRUM};

#[derive(Debug, Parser)]
#[command(name = "crw-spectra", version, about = "Spectra and determinant identities of arc walks on graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form or numerical spectrum of a walk matrix.
    Spectrum(SpectrumArgs),
    /// Run the identity and spectrum checks over the standard graph family.
    Verify(VerifyArgs),
    /// Evaluate both sides of the zeta determinant reduction at given points.
    Zeta(ZetaArgs),
    /// Print a generated graph in edge-list format.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Cycle,
    Complete,
    Bipartite,
    Petersen,
    Random,
}

/// Either a generated family or an edge-list file.
#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    /// Graph family to generate.
    #[arg(long, value_enum, conflicts_with = "file", required_unless_present = "file")]
    pub family: Option<FamilyKind>,
    /// Vertex count for cycle, complete and random families.
    #[arg(long)]
    pub n: Option<usize>,
    /// First part size for the bipartite family.
    #[arg(long)]
    pub p: Option<usize>,
    /// Second part size for the bipartite family.
    #[arg(long)]
    pub q: Option<usize>,
    /// Non-tree edges added by the random family.
    #[arg(long, default_value_t = 0)]
    pub extra: usize,
    /// Seed of the random family.
    #[arg(long, default_value_t = 1)]
    pub graph_seed: u64,
    /// Edge-list file: header `n m`, then `m` lines `u v` (1-based).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Eigensolver on the matrix chosen by `--operator`.
    Oracle,
    /// Grover matrix from the random-walk spectrum.
    Grover,
    /// Walk `P = |U|^2` on a regular graph.
    CrwRegular,
    /// Walk `P = |U|^2` on a semiregular bipartite graph.
    CrwBipartite,
    /// Coin walk on a cycle.
    Crw2Cycle,
    /// Uniform walk `B/d` on a regular graph.
    Crw2Uniform,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    Adjacency,
    Grover,
    Crw,
    Uniform,
    Coin,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    #[arg(long, value_enum)]
    pub method: Method,
    /// Matrix diagonalised by `--method oracle`.
    #[arg(long, value_enum, default_value = "crw")]
    pub operator: Operator,
    /// Coin `a,b,c,d` for the cycle walk; defaults to the half coin.
    #[arg(long)]
    pub coin: Option<String>,
    /// Also run the eigensolver and match the two multisets.
    #[arg(long)]
    pub check_oracle: bool,
    /// Matching tolerance for `--check-oracle`.
    #[arg(long, default_value_t = TOL_SPECTRUM)]
    pub tol: f64,
    /// JSON report path; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Also write eigenvalues as CSV to this path.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Zeta,
    Grover,
    Crw,
    Crw2,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    /// Relative tolerance for determinant identities.
    #[arg(long, default_value_t = TOL_IDENTITY)]
    pub tol: f64,
    #[arg(long, env = "CRW_SPECTRA_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// JSON report path; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Weighting {
    Ihara,
    Random,
    CrwInduced,
}

#[derive(Debug, Clone, Args)]
pub struct ZetaArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    #[arg(long, value_enum, default_value = "ihara")]
    pub weighting: Weighting,
    /// Seed of the random weighting.
    #[arg(long, env = "CRW_SPECTRA_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Comma-separated points such as `0.2,0.3i,0.1-0.2i`.
    #[arg(long, required = true)]
    pub u: String,
    /// Relative tolerance between the two forms.
    #[arg(long, default_value_t = TOL_IDENTITY)]
    pub tol: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    #[arg(long)]
    pub output: Option<PathBuf>,
}
