use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "billiard", version, about = "Spectra and eigenfunctions of circular quantum billiards")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels sorted by energy.
    Spectrum(SpectrumArgs),
    /// Staircase against the predicted and fitted smooth level count.
    Weyl(WeylArgs),
    /// Probability density of one eigenstate on a polar grid.
    Density(DensityArgs),
    /// Continuation sweep of a δ-coupling model.
    Delta(DeltaArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryKind {
    Circle,
    Half,
    Baffle,
    Wedge,
    Annulus,
    #[value(name = "annulus-baffle")]
    AnnulusBaffle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum DeltaModel {
    Well,
    #[default]
    Angular,
}

/// Settings shared by every subcommand. Each may also come from `--config`;
/// flags win.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// TOML file with `key = value` lines named after the long flags.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub geometry: Option<GeometryKind>,
    /// Shape parameter: wedge opening or annulus radius ratio.
    #[arg(long)]
    pub f: Option<f64>,
    /// Outer radius R.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Energy scale ħ²/2μ.
    #[arg(long = "hbar2-over-2mu", value_name = "VALUE")]
    pub hbar2_over_2mu: Option<f64>,
    /// Energy cutoff.
    #[arg(long, conflicts_with = "levels")]
    pub emax: Option<f64>,
    /// Number of lowest states, counted with multiplicity.
    #[arg(long)]
    pub levels: Option<u32>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; standard output if absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Root tolerance in kR.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Keep only this angular order.
    #[arg(long)]
    pub m: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct WeylArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DensityArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Angular order of the state.
    #[arg(long)]
    pub m: f64,
    /// Radial quantum number, from 1.
    #[arg(long)]
    pub nr: usize,
    /// Member of a degenerate cos/sin pair.
    #[arg(long, value_enum)]
    pub parity: Option<ParityArg>,
    /// Radial samples, at least 16.
    #[arg(long, default_value_t = 64)]
    pub grid_r: usize,
    /// Angular samples, at least 16.
    #[arg(long, default_value_t = 128)]
    pub grid_theta: usize,
}

#[derive(Debug, Clone, Args)]
pub struct DeltaArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value_t = DeltaModel::Angular)]
    pub model: DeltaModel,
    /// Increasing, comma-separated couplings; defaults to 0 plus a log grid
    /// from 1e-3 to 1e6.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub couplings: Option<Vec<f64>>,
    /// Number of branches (j = 0.. for angular, n = 1.. for well).
    #[arg(long, default_value_t = 4)]
    pub branches: usize,
    /// Follow the disk level with this radial index along each angular branch.
    #[arg(long)]
    pub compose_nr: Option<usize>,
}
