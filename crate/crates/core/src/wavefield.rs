//! Normalized eigenfunctions `ψ(r, θ) = N·u(kr)·Θ(θ)`, probability-density
//! grids and position expectation values.
//!
//! Lengths are in units of `R`; densities are per unit area `R²`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use libm::{cos, sin, sqrt};

use crate::quadrature::{graded_breakpoints, integrate_adaptive};
use crate::specfun::{bessel_j, jy_unchecked};
use crate::spectra::{EigenState, Geometry, SymmetryClass};
use crate::{Error, Result};

/// Relative tolerance for the radial and angular quadratures.
pub const QUADRATURE_TOL: f64 = 1e-12;

const DOMAIN_SLACK: f64 = 1e-12;

/// Shape of an angular function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngularClass {
    /// `1/√(2π)`, the `m = 0` mode.
    Constant,
    Cosine,
    Sine,
    /// `sin(m|θ|)`, with a cusp at `θ = 0`.
    HalfIntegerEven,
}

/// Which member of a degenerate `cos`/`sin` pair to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Even about `θ = 0` (cosine, constant, or `sin(m|θ|)`).
    Even,
    /// Odd about `θ = 0` (sine).
    Odd,
}

/// A normalized angular eigenfunction on a fixed interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularFunction {
    pub class: AngularClass,
    pub m: f64,
    /// Closed interval `[lo, hi]` of valid angles.
    pub domain: (f64, f64),
    /// Prefactor making `∫ Θ² dθ = 1` over the domain.
    pub scale: f64,
}

impl AngularFunction {
    pub fn constant() -> Self {
        AngularFunction { class: AngularClass::Constant, m: 0.0, domain: (-PI, PI), scale: 1.0 / sqrt(2.0 * PI) }
    }

    /// `cos(mθ)/√π` on `(−π, π]`, integer `m ≥ 1`.
    pub fn cosine(m: f64) -> Self {
        AngularFunction { class: AngularClass::Cosine, m, domain: (-PI, PI), scale: 1.0 / sqrt(PI) }
    }

    /// `sin(mθ)/√π` on `[−π, π]`: the full circle, or a baffle with integer `m`.
    pub fn sine(m: f64) -> Self {
        AngularFunction { class: AngularClass::Sine, m, domain: (-PI, PI), scale: 1.0 / sqrt(PI) }
    }

    /// `sin(m|θ|)/√π` on `[−π, π]`, half-odd-integer `m`.
    pub fn half_integer_even(m: f64) -> Self {
        AngularFunction { class: AngularClass::HalfIntegerEven, m, domain: (-PI, PI), scale: 1.0 / sqrt(PI) }
    }

    /// `sin(mθ)·√(2/Φ)` on a sector `[0, Φ]`. The half circle is `Φ = π`.
    pub fn sector_sine(m: f64, opening: f64) -> Self {
        AngularFunction { class: AngularClass::Sine, m, domain: (0.0, opening), scale: sqrt(2.0 / opening) }
    }

    /// `Θ(θ)`; errors outside the domain.
    pub fn eval(&self, theta: f64) -> Result<f64> {
        let (lo, hi) = self.domain;
        if !(theta >= lo - DOMAIN_SLACK && theta <= hi + DOMAIN_SLACK) {
            return Err(Error::Domain { what: "angle outside the angular domain", value: theta });
        }
        Ok(self.eval_unchecked(theta))
    }

    fn eval_unchecked(&self, theta: f64) -> f64 {
        let m = self.m;
        self.scale
            * match self.class {
                AngularClass::Constant => 1.0,
                AngularClass::Cosine => cos(m * theta),
                AngularClass::Sine => sin(m * theta),
                AngularClass::HalfIntegerEven => sin(m * theta.abs()),
            }
    }

    /// True if the function has a derivative jump inside its domain.
    pub fn has_cusp(&self) -> bool {
        self.class == AngularClass::HalfIntegerEven
    }

    /// Quadrature breakpoints: the domain, split at the cusp if present.
    fn breakpoints(&self) -> Vec<f64> {
        let (lo, hi) = self.domain;
        if lo < 0.0 && hi > 0.0 {
            alloc::vec![lo, 0.0, hi]
        } else {
            alloc::vec![lo, hi]
        }
    }

    /// `∫ w(θ)·Θ(θ)² dθ` over the domain.
    pub fn weighted_integral<W: Fn(f64) -> f64>(&self, weight: W) -> Result<f64> {
        let bp = self.breakpoints();
        integrate_adaptive(
            |t| {
                let v = self.eval_unchecked(t);
                weight(t) * v * v
            },
            &bp,
            QUADRATURE_TOL,
        )
    }
}

/// The angular function of `state`'s channel. For a degenerate `cos`/`sin`
/// pair `parity` picks the member (default: the sine); for other channels it
/// must match the channel's own parity if given.
pub fn angular_function(state: &EigenState, parity: Option<Parity>) -> Result<AngularFunction> {
    let m = state.nu();
    let mismatch = Err(Error::NoSuchState { what: "parity not available in this channel" });
    match state.channel.symmetry {
        SymmetryClass::Exponential => {
            if m == 0.0 {
                match parity {
                    Some(Parity::Odd) => mismatch,
                    _ => Ok(AngularFunction::constant()),
                }
            } else {
                match parity {
                    Some(Parity::Even) => Ok(AngularFunction::cosine(m)),
                    _ => Ok(AngularFunction::sine(m)),
                }
            }
        }
        SymmetryClass::HalfIntegerEven => match parity {
            Some(Parity::Odd) => mismatch,
            _ => Ok(AngularFunction::half_integer_even(m)),
        },
        SymmetryClass::SineOnly => {
            if parity == Some(Parity::Even) {
                return mismatch;
            }
            match state.geometry {
                Geometry::CircleWithBaffle | Geometry::AnnulusWithBaffle { .. } => Ok(AngularFunction::sine(m)),
                g => {
                    let (lo, hi) = g.angular_domain();
                    Ok(AngularFunction::sector_sine(m, hi - lo))
                }
            }
        }
    }
}

/// Normalized radial factor `N·u(z·r)` on `[inner, 1]`.
///
/// For the disk `u = J_ν`; for the annulus
/// `u = Y_ν(fz)·J_ν(zr) − J_ν(fz)·Y_ν(zr)` (rescaled to unit size).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialMode {
    pub nu: f64,
    pub n_r: usize,
    pub z: f64,
    /// `N` from quadrature of `∫ u² r dr`.
    pub norm: f64,
    /// `N` from the closed form `√2/|u'(z)|` (annulus: includes the inner end).
    pub closed_form_norm: f64,
    pub inner: f64,
    coeff_j: f64,
    coeff_y: f64,
}

impl RadialMode {
    /// Unnormalized `u(z·r)`.
    fn shape(&self, r: f64) -> f64 {
        let x = self.z * r;
        if self.coeff_y == 0.0 {
            if x == 0.0 {
                return if self.nu == 0.0 { self.coeff_j } else { 0.0 };
            }
            return self.coeff_j * jy_unchecked(self.nu, x).map_or(f64::NAN, |v| v.j);
        }
        match jy_unchecked(self.nu, x) {
            Ok(v) => self.coeff_j * v.j + self.coeff_y * v.y,
            Err(_) => f64::NAN,
        }
    }

    /// `N·u(z·r)`; errors outside `[inner, 1]`.
    pub fn eval(&self, r: f64) -> Result<f64> {
        if !(r >= self.inner - DOMAIN_SLACK && r <= 1.0 + DOMAIN_SLACK) {
            return Err(Error::Domain { what: "radius outside the billiard", value: r });
        }
        let v = self.norm * self.shape(r.max(self.inner).min(1.0));
        if v.is_nan() {
            return Err(Error::Overflow { what: "radial function" });
        }
        Ok(v)
    }

    /// `∫ w(r)·(N u)² r dr` over `[inner, 1]`.
    pub fn weighted_integral<W: Fn(f64) -> f64>(&self, weight: W) -> Result<f64> {
        let bp = self.breakpoints();
        let n2 = self.norm * self.norm;
        integrate_adaptive(
            |r| {
                let u = self.shape(r);
                n2 * weight(r) * u * u * r
            },
            &bp,
            QUADRATURE_TOL,
        )
    }

    fn breakpoints(&self) -> Vec<f64> {
        let panels = 8 + 2 * self.n_r;
        if self.inner > 0.0 {
            graded_breakpoints(self.inner, 1.0, panels, 0)
        } else {
            graded_breakpoints(0.0, 1.0, panels, 30)
        }
    }
}

fn radial_from_coeffs(nu: f64, n_r: usize, z: f64, inner: f64, coeff_j: f64, coeff_y: f64, closed: f64) -> Result<RadialMode> {
    let mut mode = RadialMode { nu, n_r, z, norm: 1.0, closed_form_norm: closed, inner, coeff_j, coeff_y };
    let integral = mode.weighted_integral(|_| 1.0)?;
    if !(integral > 0.0) || !integral.is_finite() {
        return Err(Error::NoConvergence { what: "radial normalization" });
    }
    mode.norm = 1.0 / sqrt(integral);
    Ok(mode)
}

/// Radial mode of the disk with `J_ν(z) = 0`, `z` the `n_r`-th zero.
pub fn radial_normalize(nu: f64, n_r: usize) -> Result<RadialMode> {
    let z = crate::specfun::bessel_j_zero(nu, n_r)?.z;
    disk_radial(nu, n_r, z)
}

fn disk_radial(nu: f64, n_r: usize, z: f64) -> Result<RadialMode> {
    let closed = core::f64::consts::SQRT_2 / bessel_j(nu + 1.0, z)?.abs();
    radial_from_coeffs(nu, n_r, z, 0.0, 1.0, 0.0, closed)
}

fn annulus_radial(nu: f64, f: f64, n_r: usize, z: f64) -> Result<RadialMode> {
    let inner = jy_unchecked(nu, f * z)?;
    if !inner.y.is_finite() {
        return Err(Error::Overflow { what: "annulus radial function" });
    }
    let s = inner.y.abs().max(inner.j.abs());
    let (cj, cy) = (inner.y / s, -inner.j / s);
    let outer = jy_unchecked(nu, z)?;
    // u' at both ends, with respect to the argument z·r.
    let up_out = cj * outer.j_prime + cy * outer.y_prime;
    let up_in = cj * inner.j_prime + cy * inner.y_prime;
    let closed = core::f64::consts::SQRT_2 / sqrt(up_out * up_out - f * f * up_in * up_in);
    radial_from_coeffs(nu, n_r, z, f, cj, cy, closed)
}

/// Radial mode for any geometry's state.
pub fn radial_mode(state: &EigenState) -> Result<RadialMode> {
    match state.geometry {
        Geometry::Annulus { f } | Geometry::AnnulusWithBaffle { f } => annulus_radial(state.nu(), f, state.n_r, state.z),
        _ => disk_radial(state.nu(), state.n_r, state.z),
    }
}

/// A full normalized eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenfunction {
    pub state: EigenState,
    pub angular: AngularFunction,
    pub radial: RadialMode,
}

impl Eigenfunction {
    pub fn new(state: &EigenState, parity: Option<Parity>) -> Result<Self> {
        Ok(Eigenfunction { state: *state, angular: angular_function(state, parity)?, radial: radial_mode(state)? })
    }

    pub fn psi(&self, r: f64, theta: f64) -> Result<f64> {
        Ok(self.radial.eval(r)? * self.angular.eval(theta)?)
    }

    /// `|ψ(r, θ)|²`.
    pub fn psi_squared(&self, r: f64, theta: f64) -> Result<f64> {
        let p = self.psi(r, theta)?;
        Ok(p * p)
    }

    /// `⟨r⟩`.
    pub fn mean_radius(&self) -> Result<f64> {
        self.radial.weighted_integral(|r| r)
    }

    /// `(⟨x⟩, ⟨y⟩)`; the integrand separates into `⟨r⟩·⟨cos θ⟩` and
    /// `⟨r⟩·⟨sin θ⟩`.
    pub fn expectation_xy(&self) -> Result<(f64, f64)> {
        let r = self.mean_radius()?;
        let c = self.angular.weighted_integral(cos)?;
        let s = self.angular.weighted_integral(sin)?;
        Ok((r * c, r * s))
    }

    /// Samples `|ψ|²` on a polar grid covering the billiard, endpoints
    /// included.
    pub fn density_grid(&self, n_r_samples: usize, n_theta_samples: usize) -> Result<DensityGrid> {
        if n_r_samples < 16 || n_theta_samples < 16 {
            return Err(Error::Domain {
                what: "grid sample count (minimum 16)",
                value: n_r_samples.min(n_theta_samples) as f64,
            });
        }
        let inner = self.radial.inner;
        let (lo, hi) = self.angular.domain;
        let r = linspace(inner, 1.0, n_r_samples);
        let theta = linspace(lo, hi, n_theta_samples);
        let ang: Vec<f64> = theta.iter().map(|&t| self.angular.eval_unchecked(t)).collect();
        let mut values = Vec::with_capacity(n_r_samples * n_theta_samples);
        for &ri in &r {
            let rad = self.radial.eval(ri)?;
            values.extend(ang.iter().map(|a| {
                let p = rad * a;
                p * p
            }));
        }
        Ok(DensityGrid { r, theta, values })
    }
}

/// `|ψ|²` at a point, building the eigenfunction on the fly.
pub fn psi_squared(state: &EigenState, r: f64, theta: f64) -> Result<f64> {
    Eigenfunction::new(state, None)?.psi_squared(r, theta)
}

/// `(⟨x⟩, ⟨y⟩)` for a state, using the default member of a degenerate pair.
pub fn expectation_xy(state: &EigenState) -> Result<(f64, f64)> {
    Eigenfunction::new(state, None)?.expectation_xy()
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    let h = (b - a) / (n - 1) as f64;
    (0..n).map(|i| if i == n - 1 { b } else { a + h * i as f64 }).collect()
}

/// `|ψ|²` on a polar grid, stored r-major: `values[i·n_θ + j]` is the
/// density at `(r[i], θ[j])`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid {
    pub r: Vec<f64>,
    pub theta: Vec<f64>,
    pub values: Vec<f64>,
}

impl DensityGrid {
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.theta.len() + j]
    }

    /// Trapezoidal `∫∫ |ψ|² r dr dθ` over the grid.
    pub fn integrate(&self) -> f64 {
        let nt = self.theta.len();
        let trap_weights = |xs: &[f64]| -> Vec<f64> {
            let n = xs.len();
            (0..n)
                .map(|k| {
                    let left = if k > 0 { xs[k] - xs[k - 1] } else { 0.0 };
                    let right = if k + 1 < n { xs[k + 1] - xs[k] } else { 0.0 };
                    0.5 * (left + right)
                })
                .collect()
        };
        let wr = trap_weights(&self.r);
        let wt = trap_weights(&self.theta);
        let mut total = 0.0;
        for (i, (&ri, &w_r)) in self.r.iter().zip(&wr).enumerate() {
            let row = &self.values[i * nt..(i + 1) * nt];
            let s: f64 = row.iter().zip(&wt).map(|(v, w)| v * w).sum();
            total += s * w_r * ri;
        }
        total
    }

    /// Grid indices `(i, j)` of the largest value.
    pub fn argmax(&self) -> (usize, usize) {
        let nt = self.theta.len();
        let k = self
            .values
            .iter()
            .enumerate()
            .fold(0, |best, (k, v)| if *v > self.values[best] { k } else { best });
        (k / nt, k % nt)
    }
}
