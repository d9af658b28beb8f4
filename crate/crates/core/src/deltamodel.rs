//! Continuation models that switch on a repulsive δ interaction.
//!
//! The 1D well of width `2L` with a central δ of strength `Λ = λμL/ħ²` has
//! even states with `Λ·sin(kL) + kL·cos(kL) = 0`. The ring with a δ of
//! strength `g` at `θ = 0` has even states with
//! `g·cos(mπ) − 2m·sin(mπ) = 0`. As the coupling goes from zero to infinity
//! each branch moves from an integer-spaced level to the hard-wall level,
//! which links the full circle to the circle with a baffle. Odd states do
//! not feel the δ and keep their unperturbed values.
//!
//! Both conditions are solved in angle form, which is monotone on each
//! branch: `kL = (n − ½)π + atan(Λ/kL)` and `mπ = jπ + atan(g/2m)`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use libm::{atan2, cos, pow, sin, sqrt};

use crate::roots::newton_bisect;
use crate::specfun::bessel_j_zero;
use crate::{Error, Result};

const ROOT_TOL: f64 = 1e-15;

fn check_coupling(what: &'static str, value: f64) -> Result<()> {
    if value >= 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain { what, value })
    }
}

/// One even branch of the well with a central δ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellDeltaBranch {
    pub lambda: f64,
    /// Branch index, from 1.
    pub n: usize,
    /// Root `kL ∈ [(n − ½)π, nπ)`.
    pub kl: f64,
    /// `(Λ·sin kL + kL·cos kL)/√(Λ² + kL²)`.
    pub residual: f64,
}

/// `Λ·sin x + x·cos x`, divided by `√(Λ² + x²)`.
pub fn well_residual(lambda: f64, kl: f64) -> f64 {
    (lambda * sin(kl) + kl * cos(kl)) / sqrt(lambda * lambda + kl * kl)
}

/// Solves the `n`-th even branch of the well at coupling `lambda`.
pub fn solve_well_delta(lambda: f64, n: usize) -> Result<WellDeltaBranch> {
    check_coupling("well coupling", lambda)?;
    if n == 0 {
        return Err(Error::Domain { what: "well branch index (from 1)", value: 0.0 });
    }
    let base = (n as f64 - 0.5) * PI;
    let kl = if lambda == 0.0 {
        base
    } else {
        newton_bisect(
            |x| Ok((x - base - atan2(lambda, x), 1.0 + lambda / (lambda * lambda + x * x))),
            base,
            n as f64 * PI,
            ROOT_TOL,
            "well δ branch",
        )?
    };
    Ok(WellDeltaBranch { lambda, n, kl, residual: well_residual(lambda, kl) })
}

/// One even branch of the ring with a δ at `θ = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularDeltaBranch {
    pub g: f64,
    /// Branch index, from 0.
    pub j: usize,
    /// Root `m ∈ [j, j + ½)`.
    pub m: f64,
    /// Phase `φ ∈ [0, π/2]` with `tan φ = g/2m`.
    pub phi: f64,
    /// `(g·cos mπ − 2m·sin mπ)/√(g² + 4m²)`.
    pub residual: f64,
}

/// `g·cos(mπ) − 2m·sin(mπ)`, divided by `√(g² + 4m²)` (zero when both vanish).
pub fn angular_residual(g: f64, m: f64) -> f64 {
    let scale = sqrt(g * g + 4.0 * m * m);
    if scale == 0.0 {
        return 0.0;
    }
    (g * cos(m * PI) - 2.0 * m * sin(m * PI)) / scale
}

/// Solves the `j`-th even branch of the ring at coupling `g`.
pub fn solve_angular_delta(g: f64, j: usize) -> Result<AngularDeltaBranch> {
    check_coupling("angular coupling", g)?;
    let base = j as f64;
    let m = if g == 0.0 {
        base
    } else {
        newton_bisect(
            |m| Ok(((m - base) * PI - atan2(g, 2.0 * m), PI + 2.0 * g / (g * g + 4.0 * m * m))),
            base,
            base + 0.5,
            ROOT_TOL,
            "angular δ branch",
        )?
    };
    let phi = atan2(g, 2.0 * m).min(FRAC_PI_2);
    Ok(AngularDeltaBranch { g, j, m, phi, residual: angular_residual(g, m) })
}

/// The normalized even eigenfunction `cos(m|θ| − φ)/N` of a ring branch,
/// with `N² = π + sin(2φ)/2m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvenAngularEigenfunction {
    pub branch: AngularDeltaBranch,
    norm: f64,
}

impl EvenAngularEigenfunction {
    pub fn new(branch: AngularDeltaBranch) -> Self {
        let norm = if branch.m == 0.0 {
            sqrt(2.0 * PI)
        } else {
            sqrt(PI + sin(2.0 * branch.phi) / (2.0 * branch.m))
        };
        EvenAngularEigenfunction { branch, norm }
    }

    /// `1/N`.
    pub fn scale(&self) -> f64 {
        1.0 / self.norm
    }

    /// `Θ(θ)` for `θ ∈ (−π, π)`.
    pub fn eval(&self, theta: f64) -> Result<f64> {
        if !(theta > -PI && theta < PI) {
            return Err(Error::Domain { what: "angle outside (−π, π)", value: theta });
        }
        Ok(cos(self.branch.m * theta.abs() - self.branch.phi) / self.norm)
    }

    /// `Θ'(0⁺) − Θ'(0⁻) = 2m·sin φ/N`.
    pub fn derivative_jump(&self) -> f64 {
        2.0 * self.branch.m * sin(self.branch.phi) / self.norm
    }
}

/// `Θ(θ)` on the branch `(g, j)` solved on the fly.
pub fn even_angular_fn(branch: &AngularDeltaBranch, theta: f64) -> Result<f64> {
    EvenAngularEigenfunction::new(*branch).eval(theta)
}

/// One row of an angular continuation sweep. `n_r`, `z` and `energy` are
/// present when the sweep follows a disk level `z = j_{m(g), n_r}`,
/// `E = z²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub g: f64,
    pub j: usize,
    pub m: f64,
    pub residual: f64,
    pub n_r: Option<usize>,
    pub z: Option<f64>,
    pub energy: Option<f64>,
}

/// One row of a well continuation sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellSweepRow {
    pub lambda: f64,
    pub n: usize,
    pub kl: f64,
    pub residual: f64,
}

fn check_grid(grid: &[f64]) -> Result<()> {
    for (i, &g) in grid.iter().enumerate() {
        check_coupling("coupling grid value", g)?;
        if i > 0 && g <= grid[i - 1] {
            return Err(Error::Domain { what: "coupling grid must be increasing", value: g });
        }
    }
    Ok(())
}

/// `m(g)` on every branch `j ≤ j_max`, branch-major. With `n_r` each row
/// also carries the disk level reached by that angular order.
pub fn continuation_sweep(j_max: usize, g_grid: &[f64], n_r: Option<usize>) -> Result<Vec<SweepRow>> {
    check_grid(g_grid)?;
    let mut rows = Vec::with_capacity((j_max + 1) * g_grid.len());
    for j in 0..=j_max {
        for &g in g_grid {
            let b = solve_angular_delta(g, j)?;
            let (z, energy) = match n_r {
                Some(n) => {
                    let z = bessel_j_zero(b.m, n)?.z;
                    (Some(z), Some(z * z))
                }
                None => (None, None),
            };
            rows.push(SweepRow { g, j, m: b.m, residual: b.residual, n_r, z, energy });
        }
    }
    Ok(rows)
}

/// `kL(Λ)` on every branch `1 ≤ n ≤ n_max`, branch-major.
pub fn well_sweep(n_max: usize, lambda_grid: &[f64]) -> Result<Vec<WellSweepRow>> {
    check_grid(lambda_grid)?;
    let mut rows = Vec::with_capacity(n_max * lambda_grid.len());
    for n in 1..=n_max {
        for &lambda in lambda_grid {
            let b = solve_well_delta(lambda, n)?;
            rows.push(WellSweepRow { lambda, n, kl: b.kl, residual: b.residual });
        }
    }
    Ok(rows)
}

/// `0` followed by ten points per decade from `1e-3` to `1e6`.
pub fn default_coupling_grid() -> Vec<f64> {
    let mut grid = alloc::vec![0.0];
    grid.extend((0..=90).map(|k| pow(10.0, -3.0 + k as f64 / 10.0)));
    grid
}
