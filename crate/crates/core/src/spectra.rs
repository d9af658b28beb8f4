//! Angular channels and complete eigenvalue spectra below an energy cutoff.
//!
//! Energies are in natural units `ħ²/(2μR²)`, so every level is `E = z²`
//! with `z = kR` a zero of the channel's radial condition.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use crate::roots::DEFAULT_ROOT_TOL;
use crate::specfun::{AnnulusZeros, BesselOrder, BesselZeros, MAX_ARGUMENT, MAX_ORDER};
use crate::{weyl, Error, Result};

/// Relative tolerance under which two energies share one staircase step.
pub const MERGE_TOL: f64 = 1e-9;

/// Billiard footprint. The outer radius is always 1 in natural units; see
/// [`crate::Units`] for physical scaling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geometry {
    FullCircle,
    HalfCircle,
    /// Full disk with an infinitely thin wall along the `θ = 0` radius.
    CircleWithBaffle,
    /// Circular sector with opening angle `(1 + f)π`, `f ∈ (−1, 1]`.
    Wedge { f: f64 },
    /// Ring `f < r < 1`, `f ∈ (0, 1)`.
    Annulus { f: f64 },
    /// Ring with a radial baffle.
    AnnulusWithBaffle { f: f64 },
}

impl Geometry {
    pub fn wedge(f: f64) -> Result<Self> {
        let g = Geometry::Wedge { f };
        g.validate()?;
        Ok(g)
    }

    pub fn annulus(f: f64) -> Result<Self> {
        let g = Geometry::Annulus { f };
        g.validate()?;
        Ok(g)
    }

    pub fn annulus_with_baffle(f: f64) -> Result<Self> {
        let g = Geometry::AnnulusWithBaffle { f };
        g.validate()?;
        Ok(g)
    }

    /// Checks the shape parameter range.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Geometry::Wedge { f } if !(f > -1.0 && f <= 1.0) => {
                Err(Error::Domain { what: "wedge parameter f (must lie in (-1, 1])", value: f })
            }
            Geometry::Annulus { f } | Geometry::AnnulusWithBaffle { f } if !(f > 0.0 && f < 1.0) => {
                Err(Error::Domain { what: "annulus parameter f (must lie in (0, 1))", value: f })
            }
            _ => Ok(()),
        }
    }

    /// Short identifier, matching the command-line spelling.
    pub fn name(&self) -> &'static str {
        match self {
            Geometry::FullCircle => "circle",
            Geometry::HalfCircle => "half",
            Geometry::CircleWithBaffle => "baffle",
            Geometry::Wedge { .. } => "wedge",
            Geometry::Annulus { .. } => "annulus",
            Geometry::AnnulusWithBaffle { .. } => "annulus-baffle",
        }
    }

    /// The shape parameter `f`, where there is one.
    pub fn parameter(&self) -> Option<f64> {
        match *self {
            Geometry::Wedge { f } | Geometry::Annulus { f } | Geometry::AnnulusWithBaffle { f } => Some(f),
            _ => None,
        }
    }

    /// Inner radius (0 for simply connected shapes).
    pub fn inner_radius(&self) -> f64 {
        match *self {
            Geometry::Annulus { f } | Geometry::AnnulusWithBaffle { f } => f,
            _ => 0.0,
        }
    }

    /// Angular interval `[lo, hi]` on which angular functions live.
    pub fn angular_domain(&self) -> (f64, f64) {
        match *self {
            Geometry::FullCircle | Geometry::Annulus { .. } => (-PI, PI),
            Geometry::CircleWithBaffle | Geometry::AnnulusWithBaffle { .. } => (-PI, PI),
            Geometry::HalfCircle => (0.0, PI),
            Geometry::Wedge { f } => (0.0, (1.0 + f) * PI),
        }
    }

    pub fn area(&self) -> f64 {
        weyl::ledger(*self).area
    }

    pub fn perimeter(&self) -> f64 {
        weyl::ledger(*self).perimeter
    }

    pub fn has_baffle(&self) -> bool {
        matches!(self, Geometry::CircleWithBaffle | Geometry::AnnulusWithBaffle { .. })
    }
}

/// How the angular functions of a channel are built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryClass {
    /// `e^{±imθ}` pair (cosine and sine), or the constant for `m = 0`.
    Exponential,
    /// `sin(mθ)` only.
    SineOnly,
    /// `sin(m|θ|)`, even about the baffle, for half-odd-integer `m`.
    HalfIntegerEven,
}

/// One quantized angular order of a geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularChannel {
    pub order: BesselOrder,
    /// Generating integer: `ν = n` (circle, half circle, annulus),
    /// `ν = n/2` (baffle), `ν = n/(1 + f)` (wedge).
    pub n: u32,
    pub degeneracy: u32,
    pub symmetry: SymmetryClass,
}

impl AngularChannel {
    #[inline]
    pub fn nu(&self) -> f64 {
        self.order.value()
    }
}

fn first_channel_index(geometry: Geometry) -> u32 {
    match geometry {
        Geometry::FullCircle | Geometry::Annulus { .. } => 0,
        _ => 1,
    }
}

/// The channel generated by integer `n` (see [`AngularChannel::n`]).
pub fn channel(geometry: Geometry, n: u32) -> Result<AngularChannel> {
    geometry.validate()?;
    if n < first_channel_index(geometry) {
        return Err(Error::NoSuchState { what: "channel index below the first allowed value" });
    }
    let nf = n as f64;
    let (nu, degeneracy, symmetry) = match geometry {
        Geometry::FullCircle | Geometry::Annulus { .. } => (nf, if n == 0 { 1 } else { 2 }, SymmetryClass::Exponential),
        Geometry::HalfCircle => (nf, 1, SymmetryClass::SineOnly),
        Geometry::CircleWithBaffle | Geometry::AnnulusWithBaffle { .. } => {
            let sym = if n.is_multiple_of(2) { SymmetryClass::SineOnly } else { SymmetryClass::HalfIntegerEven };
            (nf / 2.0, 1, sym)
        }
        Geometry::Wedge { f } => (nf / (1.0 + f), 1, SymmetryClass::SineOnly),
    };
    Ok(AngularChannel { order: BesselOrder::new(nu)?, n, degeneracy, symmetry })
}

/// All channels with `ν ≤ nu_max`, in increasing `ν`.
pub fn channels(geometry: Geometry, nu_max: f64) -> Result<Vec<AngularChannel>> {
    geometry.validate()?;
    if !(nu_max > 0.0) || !nu_max.is_finite() {
        return Err(Error::Domain { what: "nu_max", value: nu_max });
    }
    let mut out = Vec::new();
    let mut n = first_channel_index(geometry);
    loop {
        let c = channel(geometry, n)?;
        if c.nu() > nu_max {
            break;
        }
        out.push(c);
        n += 1;
    }
    Ok(out)
}

/// Finds the channel of `geometry` whose order equals `nu` (within `1e-12`).
pub fn channel_for_order(geometry: Geometry, nu: f64) -> Result<AngularChannel> {
    let cands = channels(geometry, nu + 1e-9)?;
    cands
        .into_iter()
        .find(|c| (c.nu() - nu).abs() <= 1e-12 * nu.max(1.0))
        .ok_or(Error::NoSuchState { what: "angular order not allowed for this geometry" })
}

/// One energy level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenState {
    pub geometry: Geometry,
    pub channel: AngularChannel,
    /// Radial quantum number; `n_r − 1` interior radial nodes.
    pub n_r: usize,
    /// Dimensionless root `z = kR`.
    pub z: f64,
    /// `z²`, in units of `ħ²/(2μR²)`.
    pub energy: f64,
    pub multiplicity: u32,
}

impl EigenState {
    pub fn nu(&self) -> f64 {
        self.channel.nu()
    }
}

/// One step of a [`Staircase`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Step {
    pub energy: f64,
    pub multiplicity: u32,
    /// `N(energy)`, including this step.
    pub cumulative: u32,
}

/// The level counting function `N(E) = Σ mᵢ θ(E − Eᵢ)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Staircase {
    steps: Vec<Step>,
}

impl Staircase {
    /// Builds a staircase from `(energy, multiplicity)` pairs in any order;
    /// energies closer than [`MERGE_TOL`] (relative) are merged.
    pub fn from_levels<I: IntoIterator<Item = (f64, u32)>>(levels: I) -> Self {
        let mut v: Vec<(f64, u32)> = levels.into_iter().collect();
        v.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut steps: Vec<Step> = Vec::with_capacity(v.len());
        let mut cumulative = 0u32;
        for (e, m) in v {
            cumulative += m;
            match steps.last_mut() {
                Some(last) if (e - last.energy).abs() <= MERGE_TOL * e.abs().max(1.0) => {
                    last.multiplicity += m;
                    last.cumulative = cumulative;
                }
                _ => steps.push(Step { energy: e, multiplicity: m, cumulative }),
            }
        }
        Staircase { steps }
    }

    pub fn from_states(states: &[EigenState]) -> Self {
        Self::from_levels(states.iter().map(|s| (s.energy, s.multiplicity)))
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of distinct energies.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Total number of states, counted with multiplicity.
    pub fn total(&self) -> u32 {
        self.steps.last().map_or(0, |s| s.cumulative)
    }

    /// `N(E)`: states with energy `≤ E`.
    pub fn count(&self, energy: f64) -> u32 {
        let k = self.steps.partition_point(|s| s.energy <= energy);
        if k == 0 { 0 } else { self.steps[k - 1].cumulative }
    }

    /// Keeps the lowest steps until at least `count` states are included.
    pub fn truncated(&self, count: u32) -> Staircase {
        let k = self.steps.partition_point(|s| s.cumulative < count);
        let end = (k + 1).min(self.steps.len());
        Staircase { steps: self.steps[..end].to_vec() }
    }
}

/// All levels of a geometry up to a cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub geometry: Geometry,
    pub e_max: f64,
    /// Sorted by energy, then order, then radial index.
    pub states: Vec<EigenState>,
}

impl Spectrum {
    pub fn staircase(&self) -> Staircase {
        Staircase::from_states(&self.states)
    }

    /// Total number of states, counted with multiplicity.
    pub fn total(&self) -> u32 {
        self.states.iter().map(|s| s.multiplicity).sum()
    }
}

fn cmp_states(a: &EigenState, b: &EigenState) -> Ordering {
    a.energy
        .total_cmp(&b.energy)
        .then(a.channel.nu().total_cmp(&b.channel.nu()))
        .then(a.n_r.cmp(&b.n_r))
}

fn check_cutoff(e_max: f64) -> Result<f64> {
    if !(e_max > 0.0) || !e_max.is_finite() {
        return Err(Error::Domain { what: "E_max", value: e_max });
    }
    let z_max = libm::sqrt(e_max);
    if z_max > MAX_ARGUMENT {
        return Err(Error::OutOfEnvelope { what: "required Bessel argument sqrt(E_max)", value: z_max, limit: MAX_ARGUMENT });
    }
    Ok(z_max)
}

/// Levels of one channel with `E ≤ e_max`.
pub fn channel_spectrum(geometry: Geometry, channel: AngularChannel, e_max: f64, tol: f64) -> Result<Vec<EigenState>> {
    geometry.validate()?;
    let z_max = check_cutoff(e_max)?;
    let nu = channel.nu();
    let mut out = Vec::new();
    // Every root lies above ν, so such channels contribute nothing.
    if nu >= z_max {
        return Ok(out);
    }
    if nu > MAX_ORDER {
        return Err(Error::OutOfEnvelope { what: "required Bessel order", value: nu, limit: MAX_ORDER });
    }
    let mut push = |index: usize, z: f64| {
        out.push(EigenState { geometry, channel, n_r: index, z, energy: z * z, multiplicity: channel.degeneracy });
    };
    match geometry {
        Geometry::Annulus { f } | Geometry::AnnulusWithBaffle { f } => {
            for zero in AnnulusZeros::with_tol(nu, f, tol)? {
                let zero = zero?;
                if zero.z > z_max {
                    break;
                }
                push(zero.index, zero.z);
            }
        }
        _ => {
            for zero in BesselZeros::with_tol(nu, tol)? {
                let zero = zero?;
                if zero.z > z_max {
                    break;
                }
                push(zero.index, zero.z);
            }
        }
    }
    Ok(out)
}

/// Every level with `E ≤ e_max`, with multiplicities.
pub fn spectrum(geometry: Geometry, e_max: f64) -> Result<Spectrum> {
    spectrum_with_tol(geometry, e_max, DEFAULT_ROOT_TOL)
}

/// [`spectrum`] with an explicit root tolerance in `z`.
///
/// Completeness: the first zero of every channel exceeds `ν` (for the
/// annulus as well), so channels are enumerated until `ν ≥ √e_max`.
pub fn spectrum_with_tol(geometry: Geometry, e_max: f64, tol: f64) -> Result<Spectrum> {
    geometry.validate()?;
    let z_max = check_cutoff(e_max)?;
    let mut states = Vec::new();
    let mut n = first_channel_index(geometry);
    loop {
        let c = channel(geometry, n)?;
        if c.nu() >= z_max {
            break;
        }
        states.extend(channel_spectrum(geometry, c, e_max, tol)?);
        n += 1;
    }
    states.sort_by(cmp_states);
    Ok(Spectrum { geometry, e_max, states })
}

/// The lowest `count` states (with multiplicity; a degenerate level that
/// straddles the count is kept whole).
pub fn lowest_levels(geometry: Geometry, count: u32) -> Result<Spectrum> {
    lowest_levels_with_tol(geometry, count, DEFAULT_ROOT_TOL)
}

/// [`lowest_levels`] with an explicit root tolerance in `z`.
pub fn lowest_levels_with_tol(geometry: Geometry, count: u32, tol: f64) -> Result<Spectrum> {
    geometry.validate()?;
    if count == 0 {
        return Err(Error::Domain { what: "level count", value: 0.0 });
    }
    let model = weyl::predict(geometry);
    // Invert the smooth count for a first cutoff, with some headroom.
    let target = 1.2 * count as f64 + 10.0;
    let (a, b) = (model.a, model.b);
    let k = (-b + libm::sqrt(b * b + 4.0 * a * target)) / (2.0 * a);
    let mut e_max = (k * k).max(10.0);
    loop {
        let spec = spectrum_with_tol(geometry, e_max, tol)?;
        if spec.total() >= count {
            let mut kept: Vec<EigenState> = Vec::new();
            let mut total = 0u32;
            for s in spec.states {
                if total >= count {
                    // Keep the rest of a degenerate cluster.
                    match kept.last() {
                        Some(last) if (s.energy - last.energy).abs() <= MERGE_TOL * s.energy.max(1.0) => {}
                        _ => break,
                    }
                }
                total += s.multiplicity;
                kept.push(s);
            }
            let e_top = kept.last().map_or(0.0, |s: &EigenState| s.energy);
            return Ok(Spectrum { geometry, e_max: e_top, states: kept });
        }
        e_max *= 1.5;
    }
}

/// The state with angular order `nu` and radial index `n_r`.
pub fn state(geometry: Geometry, nu: f64, n_r: usize) -> Result<EigenState> {
    let channel = channel_for_order(geometry, nu)?;
    let nu = channel.nu();
    let zero = match geometry {
        Geometry::Annulus { f } | Geometry::AnnulusWithBaffle { f } => crate::specfun::annulus_zero(nu, f, n_r)?,
        _ => crate::specfun::bessel_j_zero(nu, n_r)?,
    };
    Ok(EigenState { geometry, channel, n_r, z: zero.z, energy: zero.z * zero.z, multiplicity: channel.degeneracy })
}

/// Splits the baffle spectrum into integer-order and half-integer-order parts.
pub fn baffle_decomposition(e_max: f64) -> Result<(Staircase, Staircase)> {
    let spec = spectrum(Geometry::CircleWithBaffle, e_max)?;
    let (int, half): (Vec<EigenState>, Vec<EigenState>) =
        spec.states.into_iter().partition(|s| s.channel.order.is_integer());
    Ok((Staircase::from_states(&int), Staircase::from_states(&half)))
}
