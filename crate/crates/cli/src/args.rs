use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "greatcircle", version, about = "Great-circle fibrations of S³, curvature tensors and CROSS volumes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for all sampling.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    /// Number of samples; each command has its own default.
    #[arg(long, global = true)]
    pub samples: Option<usize>,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Tolerance override as NAME=VALUE; also accepted as --tol.NAME VALUE.
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hopf and skew-Hopf fibrations given by a 2×2 map F = [[a, b], [c, d]].
    #[command(subcommand)]
    Fibration(FibrationCommand),
    /// Base surface in S² × S², graph test and projection/linear/lift fit.
    #[command(allow_negative_numbers = true)]
    Grassmann(GrassmannArgs),
    /// Curvature tensor of a skew-Hopf fibration and its verification.
    #[command(allow_negative_numbers = true)]
    Curvature(CurvatureArgs),
    /// β(a, n), CROSS volume and the model-space integral identities.
    Volume(VolumeArgs),
    /// Pinching sweep of Berger metrics on S³.
    Berger(BergerArgs),
}

#[derive(Debug, Subcommand)]
pub enum FibrationCommand {
    /// Almost complex structure of F and the round-trip error.
    #[command(allow_negative_numbers = true)]
    Build(MapArgs),
    /// Sampled disjointness check and orthogonal fiber pair.
    #[command(allow_negative_numbers = true)]
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct MapArgs {
    /// Entry F11 of F = [[a, b], [c, d]]
    pub a: f64,
    /// Entry F12
    pub b: f64,
    /// Entry F21
    pub c: f64,
    /// Entry F22
    pub d: f64,
}

impl MapArgs {
    pub fn entries(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

#[derive(Debug, Args)]
pub struct OptionalMapArgs {
    /// Entries a b c d of F; omit together with --hopf.
    #[arg(num_args = 4, value_names = ["A", "B", "C", "D"])]
    pub entries: Option<Vec<f64>>,

    /// Use the canonical Hopf fibration instead of F.
    #[arg(long, conflicts_with = "entries")]
    pub hopf: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub map: OptionalMapArgs,

    /// Accept F even if it has a real eigenvalue, to watch the check fail.
    #[arg(long)]
    pub force: bool,

    /// Angular grid of the orthogonal-pair search.
    #[arg(long, default_value_t = 8)]
    pub grid: usize,
}

#[derive(Debug, Args)]
pub struct GrassmannArgs {
    #[command(flatten)]
    pub map: OptionalMapArgs,
}

#[derive(Debug, Args)]
pub struct CurvatureArgs {
    #[command(flatten)]
    pub map: MapArgs,

    /// Negative coefficient of the λ-plane block
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: f64,

    /// Negative coefficient of the h-plane block
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    pub a: u32,
    pub n: u32,

    /// Quadrature panels per length π.
    #[arg(long, default_value_t = 64)]
    pub panels: usize,

    /// Gauss–Legendre nodes per panel.
    #[arg(long, default_value_t = 8)]
    pub nodes: usize,
}

#[derive(Debug, Args)]
pub struct BergerArgs {
    pub s_min: f64,
    pub s_max: f64,
    pub steps: usize,
}

/// Rewrites `--tol.NAME=VALUE` and `--tol.NAME VALUE` as `--tol NAME=VALUE`.
pub fn normalize_tolerance_flags<I: IntoIterator<Item = String>>(args: I) -> Vec<String> {
    let mut out = Vec::new();
    let mut iter = args.into_iter();
    while let Some(arg) = iter.next() {
        match arg.strip_prefix("--tol.") {
            Some(rest) => {
                out.push("--tol".to_string());
                if rest.contains('=') {
                    out.push(rest.to_string());
                } else {
                    let value = iter.next().unwrap_or_default();
                    out.push(format!("{rest}={value}"));
                }
            }
            None => out.push(arg),
        }
    }
    out
}
