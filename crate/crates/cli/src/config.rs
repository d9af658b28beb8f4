use std::path::{Path, PathBuf};

use billiard_core::spectra::Geometry;
use billiard_core::{roots::DEFAULT_ROOT_TOL, Units};
use clap::ValueEnum;
use serde::Deserialize;

use crate::args::{CommonArgs, Format, GeometryKind};
use crate::CliError;

/// Contents of a `--config` file. Keys match the long flag names.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub geometry: Option<String>,
    pub f: Option<f64>,
    pub radius: Option<f64>,
    pub hbar2_over_2mu: Option<f64>,
    pub emax: Option<f64>,
    pub levels: Option<u32>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::ConfigRead { path: path.into(), source })?;
        Self::parse(&text).map_err(|message| CliError::ConfigParse { path: path.into(), message })
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string().trim_end().to_owned())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cutoff {
    /// Energy cutoff in natural units.
    Energy(f64),
    Levels(u32),
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub geometry: Geometry,
    pub units: Units,
    pub cutoff: Option<Cutoff>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub tol: f64,
}

fn parse_enum<T: ValueEnum>(field: &'static str, s: &str) -> Result<T, CliError> {
    T::from_str(s, true).map_err(|_| {
        let allowed: Vec<String> =
            T::value_variants().iter().filter_map(|v| v.to_possible_value()).map(|p| p.get_name().to_owned()).collect();
        CliError::field(field, format!("unknown value {s:?} (expected one of {})", allowed.join(", ")))
    })
}

fn positive(field: &'static str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::field(field, format!("must be a positive finite number (got {v})")))
    }
}

fn build_geometry(kind: GeometryKind, f: Option<f64>) -> Result<Geometry, CliError> {
    let needs_f = matches!(kind, GeometryKind::Wedge | GeometryKind::Annulus | GeometryKind::AnnulusBaffle);
    let name = kind.to_possible_value().map(|p| p.get_name().to_owned()).unwrap_or_default();
    match (needs_f, f) {
        (false, Some(_)) => return Err(CliError::field("f", format!("geometry `{name}` takes no shape parameter"))),
        (true, None) => return Err(CliError::field("f", format!("geometry `{name}` requires a shape parameter"))),
        _ => {}
    }
    let range = if kind == GeometryKind::Wedge { "(-1, 1]" } else { "(0, 1)" };
    let bad_f = |_| CliError::field("f", format!("geometry `{name}` requires f in {range} (got {})", f.unwrap_or(f64::NAN)));
    match kind {
        GeometryKind::Circle => Ok(Geometry::FullCircle),
        GeometryKind::Half => Ok(Geometry::HalfCircle),
        GeometryKind::Baffle => Ok(Geometry::CircleWithBaffle),
        GeometryKind::Wedge => Geometry::wedge(f.unwrap()).map_err(bad_f),
        GeometryKind::Annulus => Geometry::annulus(f.unwrap()).map_err(bad_f),
        GeometryKind::AnnulusBaffle => Geometry::annulus_with_baffle(f.unwrap()).map_err(bad_f),
    }
}

impl RunConfig {
    /// Merges flags over the config file (if any) and validates the result.
    /// The cutoff is one setting: `--emax` or `--levels` on the command line
    /// replaces either key from the file.
    pub fn resolve(flags: &CommonArgs) -> Result<Self, CliError> {
        let file = match &flags.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        Self::merge(flags, file)
    }

    pub fn merge(flags: &CommonArgs, file: FileConfig) -> Result<Self, CliError> {
        let kind = match (flags.geometry, &file.geometry) {
            (Some(k), _) => k,
            (None, Some(s)) => parse_enum("geometry", s)?,
            (None, None) => GeometryKind::Circle,
        };
        let geometry = build_geometry(kind, flags.f.or(file.f))?;

        let radius = positive("radius", flags.radius.or(file.radius).unwrap_or(1.0))?;
        let scale = positive("hbar2-over-2mu", flags.hbar2_over_2mu.or(file.hbar2_over_2mu).unwrap_or(1.0))?;
        let units = Units::new(radius, scale);

        let (emax, levels) = if flags.emax.is_some() || flags.levels.is_some() {
            (flags.emax, flags.levels)
        } else {
            (file.emax, file.levels)
        };
        let cutoff = match (emax, levels) {
            (Some(_), Some(_)) => return Err(CliError::field("emax", "give either `emax` or `levels`, not both")),
            (Some(e), None) => Some(Cutoff::Energy(units.to_natural_energy(positive("emax", e)?))),
            (None, Some(0)) => return Err(CliError::field("levels", "must be at least 1")),
            (None, Some(n)) => Some(Cutoff::Levels(n)),
            (None, None) => None,
        };

        let format = match (flags.format, &file.format) {
            (Some(f), _) => f,
            (None, Some(s)) => parse_enum("format", s)?,
            (None, None) => Format::Csv,
        };
        let tol = positive("tol", flags.tol.or(file.tol).unwrap_or(DEFAULT_ROOT_TOL))?;
        Ok(RunConfig { geometry, units, cutoff, format, out: flags.out.clone().or(file.out), tol })
    }

    pub fn require_cutoff(&self) -> Result<Cutoff, CliError> {
        self.cutoff.ok_or_else(|| CliError::field("emax", "this command needs `emax` or `levels`"))
    }
}
