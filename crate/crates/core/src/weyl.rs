//! Smooth level counting from area and perimeter, and least-squares fits of
//! computed staircases to `N(E) = aE + b√E`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use libm::sqrt;

use crate::spectra::{Geometry, Staircase};
use crate::{Error, Result};

/// Fewer steps than this make the two-parameter fit unreliable.
pub const MIN_FIT_LEVELS: usize = 50;

/// Area and perimeter in units of `R²` and `R`.
///
/// A baffle counts twice toward the perimeter, once per face.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryLedger {
    pub area: f64,
    pub perimeter: f64,
}

impl GeometryLedger {
    /// The same shape with outer radius `radius`.
    pub fn scaled(&self, radius: f64) -> GeometryLedger {
        GeometryLedger { area: self.area * radius * radius, perimeter: self.perimeter * radius }
    }
}

/// Area/perimeter for a unit outer radius.
pub fn ledger(geometry: Geometry) -> GeometryLedger {
    let (area, perimeter) = match geometry {
        Geometry::FullCircle => (PI, 2.0 * PI),
        Geometry::HalfCircle => (PI / 2.0, 2.0 + PI),
        Geometry::CircleWithBaffle => (PI, 2.0 * PI + 2.0),
        Geometry::Wedge { f } => ((1.0 + f) * PI / 2.0, 2.0 + (1.0 + f) * PI),
        Geometry::Annulus { f } => (PI * (1.0 - f * f), 2.0 * PI * (1.0 + f)),
        Geometry::AnnulusWithBaffle { f } => (PI * (1.0 - f * f), 2.0 * PI * (1.0 + f) + 2.0 * (1.0 - f)),
    };
    GeometryLedger { area, perimeter }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelSource {
    Predicted,
    Fitted,
}

/// `N(E) ≈ aE + b√E` in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylModel {
    pub a: f64,
    pub b: f64,
    pub source: ModelSource,
    /// Root-mean-square residual of a fit; `None` for predictions.
    pub rms: Option<f64>,
}

impl WeylModel {
    pub fn eval(&self, energy: f64) -> f64 {
        self.a * energy + self.b * sqrt(energy)
    }

    /// The model with the perimeter term dropped.
    pub fn area_only(&self) -> WeylModel {
        WeylModel { b: 0.0, ..*self }
    }
}

/// `a = A/4π`, `b = −P/4π`.
pub fn predict(geometry: Geometry) -> WeylModel {
    let l = ledger(geometry);
    WeylModel { a: l.area / (4.0 * PI), b: -l.perimeter / (4.0 * PI), source: ModelSource::Predicted, rms: None }
}

/// Samples `(Eᵢ, N(Eᵢ) − mᵢ/2)`: the staircase value halfway up each step.
pub fn midpoint_samples(staircase: &Staircase) -> Vec<(f64, f64)> {
    staircase
        .steps()
        .iter()
        .map(|s| (s.energy, s.cumulative as f64 - 0.5 * s.multiplicity as f64))
        .collect()
}

/// Least-squares fit of `(E, N)` samples to `aE + b√E` through the normal
/// equations of the column-scaled basis `{E, √E}`.
pub fn fit_samples(samples: &[(f64, f64)]) -> Result<WeylModel> {
    if samples.len() < 2 {
        return Err(Error::InsufficientData { needed: 2, got: samples.len() });
    }
    let (mut see, mut ses, mut sss, mut sne, mut sns) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for &(e, n) in samples {
        if !(e >= 0.0) {
            return Err(Error::Domain { what: "fit energy", value: e });
        }
        let r = sqrt(e);
        see += e * e;
        ses += e * r;
        sss += e;
        sne += n * e;
        sns += n * r;
    }
    let (s1, s2) = (sqrt(see), sqrt(sss));
    if s1 == 0.0 || s2 == 0.0 {
        return Err(Error::Domain { what: "fit energies", value: 0.0 });
    }
    let r = ses / (s1 * s2);
    let det = 1.0 - r * r;
    if !(det > 1e-14) {
        return Err(Error::Domain { what: "fit design matrix (singular)", value: det });
    }
    let (u1, u2) = (sne / s1, sns / s2);
    let a = (u1 - r * u2) / det / s1;
    let b = (u2 - r * u1) / det / s2;
    let ss: f64 = samples
        .iter()
        .map(|&(e, n)| {
            let d = n - (a * e + b * sqrt(e));
            d * d
        })
        .sum();
    let rms = sqrt(ss / samples.len() as f64);
    Ok(WeylModel { a, b, source: ModelSource::Fitted, rms: Some(rms) })
}

/// Fits a staircase sampled at step midpoints.
pub fn fit(staircase: &Staircase) -> Result<WeylModel> {
    if staircase.len() < MIN_FIT_LEVELS {
        return Err(Error::InsufficientData { needed: MIN_FIT_LEVELS, got: staircase.len() });
    }
    fit_samples(&midpoint_samples(staircase))
}

/// `(Eᵢ, N_mid(Eᵢ) − model(Eᵢ))` at each step, with the midpoint sampling
/// used by [`fit`].
pub fn staircase_residual(staircase: &Staircase, model: &WeylModel) -> Vec<(f64, f64)> {
    midpoint_samples(staircase).into_iter().map(|(e, n)| (e, n - model.eval(e))).collect()
}

/// Largest `|N(E) − model(E)|` over all `E ≤ e_max`, checking both sides of
/// every step.
pub fn max_deviation(staircase: &Staircase, model: &WeylModel, e_max: f64) -> f64 {
    let mut worst: f64 = 0.0;
    for s in staircase.steps().iter().filter(|s| s.energy <= e_max) {
        let w = model.eval(s.energy);
        let after = s.cumulative as f64;
        let before = after - s.multiplicity as f64;
        worst = worst.max((after - w).abs()).max((before - w).abs());
    }
    // Between steps the model is monotone once E > (b/2a)², so the extremes
    // sit at step edges; the end of the range is checked separately.
    let w_end = model.eval(e_max);
    worst.max((staircase.count(e_max) as f64 - w_end).abs())
}

/// One row of the staircase/Weyl comparison export.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub energy: f64,
    /// Midpoint-sampled staircase value `N(E) − m/2`.
    pub n_data: f64,
    pub n_predicted: f64,
    pub n_fitted: f64,
    /// `n_data − n_fitted`.
    pub residual: f64,
}

pub fn comparison_table(staircase: &Staircase, predicted: &WeylModel, fitted: &WeylModel) -> Vec<ComparisonRow> {
    midpoint_samples(staircase)
        .into_iter()
        .map(|(e, n)| {
            let nf = fitted.eval(e);
            ComparisonRow { energy: e, n_data: n, n_predicted: predicted.eval(e), n_fitted: nf, residual: n - nf }
        })
        .collect()
}
