use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "crimp", version, about = "Equalize the closeness centrality of two vertices by adding edges")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write an instance from a generator family, with a certificate sidecar.
    Generate(GenerateArgs),
    /// Run a solver on an instance file and write a run report.
    Solve(SolveArgs),
    /// Evaluate a structural check on an instance file or a seeded random batch.
    Verify(VerifyArgs),
    /// Time the neighborhood solver on seeded random graphs (CSV).
    Bench(BenchArgs),
    /// Emit every connected graph on up to `max-n` vertices in graph6, one per line.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// theorem1, theorem2, theorem4, fig1a, fig1b, star or random.
    #[arg(long)]
    pub family: String,
    /// Set family as `;`-separated sets of `,`-separated elements, e.g. `0;1;0,1`.
    #[arg(long)]
    pub sets: Option<String>,
    #[arg(long)]
    pub universe: Option<usize>,
    /// Set-cover budget.
    #[arg(long)]
    pub budget: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge count of a random graph.
    #[arg(long)]
    pub m: Option<usize>,
    /// Edge budget of star and random instances.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Size of the pendant independent set of the figure families.
    #[arg(long = "X")]
    pub x: Option<usize>,
    /// Target ratio, as a fraction or decimal.
    #[arg(long)]
    pub tau: Option<String>,
    #[arg(long)]
    pub c: Option<String>,
    #[arg(long)]
    pub eps: Option<String>,
    #[arg(long)]
    pub vertex_cap: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Instance file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Certificate sidecar; defaults to `<out>.cert.json`.
    #[arg(long)]
    pub cert: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// trivial, neighborhood, exact-ratio, exact-gap, greedy-centrality or greedy-diameter.
    #[arg(long, default_value = "neighborhood")]
    pub algo: String,
    /// smallest-id or max-decrease.
    #[arg(long, default_value = "smallest-id")]
    pub policy: String,
    /// Enumeration cap of the exact solvers; overrides CRIMP_MAX_ENUM.
    #[arg(long)]
    pub cap: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// obs1, no-switching, termination or private-neighbors.
    #[arg(long)]
    pub check: String,
    #[arg(long = "in", conflicts_with = "random")]
    pub input: Option<PathBuf>,
    /// Vertex added to `a` by the termination check; defaults to the smallest
    /// private neighbor of `b`.
    #[arg(long)]
    pub u: Option<u32>,
    /// Check this many seeded random instances instead of a file.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest vertex count of random instances.
    #[arg(long, default_value_t = 50)]
    pub max_n: usize,
    /// Largest budget of random instances.
    #[arg(long, default_value_t = 2)]
    pub max_k: usize,
    #[arg(long)]
    pub cap: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "10000,20000,40000,80000")]
    pub sizes: Vec<usize>,
    /// Edges per vertex.
    #[arg(long, value_delimiter = ',', default_value = "5")]
    pub densities: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "64")]
    pub k: Vec<usize>,
    /// Random instances per size, seeded consecutively from `--seed`; scaling
    /// should be read from per-size medians.
    #[arg(long, default_value_t = 5)]
    pub instances: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[arg(long, default_value = "smallest-id")]
    pub policy: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
