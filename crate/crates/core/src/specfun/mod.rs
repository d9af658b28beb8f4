//! Special functions: Bessel functions of real order, spherical Bessel
//! functions and bracketed zero enumeration.
//!
//! Accuracy contract: for `0 ≤ ν ≤ 100` and `0 ≤ z ≤ 1000`, `J_ν` and `Y_ν`
//! carry relative errors below `1e-12` (measured against the local envelope
//! `√(J² + Y²)` in the oscillatory region, so zeros are no exception), apart
//! from `J_ν` values that underflow the double range. Enumerated
//! zeros satisfy `|J_ν(z)| ≤ 1e-12·max(1, |J'_ν(z)|·z)`. Outside that range the
//! functions still evaluate, but [`crate::spectra`] refuses to rely on them.

mod annulus;
mod bessel;
mod spherical;
mod zeros;

pub use annulus::{annulus_det, annulus_zero, annulus_zero_with_tol, AnnulusZeros};
pub use bessel::{bessel_j, bessel_j_prime, bessel_jy, bessel_y, bessel_y_prime, BesselJY};
pub use spherical::spherical_j;
pub use zeros::{bessel_j_zero, bessel_j_zero_with_tol, BesselZero, BesselZeros};

pub(crate) use bessel::jy_unchecked;

use crate::{Error, Result};

/// Largest Bessel order covered by the accuracy contract.
pub const MAX_ORDER: f64 = 100.0;
/// Largest argument covered by the accuracy contract.
pub const MAX_ARGUMENT: f64 = 1000.0;

/// A non-negative real Bessel order `ν`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if nu >= 0.0 && nu.is_finite() {
            Ok(BesselOrder(nu))
        } else {
            Err(Error::Domain { what: "bessel order", value: nu })
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// True if `ν` is a whole number.
    pub fn is_integer(self) -> bool {
        libm::floor(self.0) == self.0
    }

    /// True if `ν` is an odd multiple of one half.
    pub fn is_half_odd_integer(self) -> bool {
        let twice = 2.0 * self.0;
        libm::floor(twice) == twice && !self.is_integer()
    }
}

impl TryFrom<f64> for BesselOrder {
    type Error = Error;

    fn try_from(nu: f64) -> Result<Self> {
        BesselOrder::new(nu)
    }
}

impl From<BesselOrder> for f64 {
    fn from(o: BesselOrder) -> f64 {
        o.0
    }
}
