use core::f64::consts::PI;

use super::bessel::jy_unchecked;
use super::BesselOrder;
use crate::roots::{newton_bisect_bracketed, DEFAULT_ROOT_TOL};
use crate::{Error, Result};

/// Scan step for sign changes. Consecutive positive zeros of `J_ν` are more
/// than 3 apart for every `ν ≥ 0`, so a step of `π/4` never straddles two.
const SCAN_STEP: f64 = PI / 4.0;

/// The `index`-th positive zero (1-based) of `J_ν`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselZero {
    pub order: BesselOrder,
    pub index: usize,
    pub z: f64,
}

/// McMahon's large-zero approximation `β − (4ν² − 1)/(8β)`,
/// `β = (n + ν/2 − 1/4)π`. Used only to bound the scan.
pub(crate) fn mcmahon(nu: f64, n: usize) -> f64 {
    let beta = (n as f64 + 0.5 * nu - 0.25) * PI;
    beta - (4.0 * nu * nu - 1.0) / (8.0 * beta)
}

fn j_value(nu: f64, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    Ok(jy_unchecked(nu, x)?.j)
}

/// Iterator over the positive zeros of `J_ν` in increasing order.
///
/// Zeros are isolated by a sign-change scan starting at `z = ν` (there are
/// none below) and refined by bisection-safeguarded Newton.
#[derive(Debug, Clone)]
pub struct BesselZeros {
    order: BesselOrder,
    tol: f64,
    found: usize,
    a: f64,
    f_a: f64,
    failed: bool,
}

impl BesselZeros {
    pub fn new(nu: f64) -> Result<Self> {
        Self::with_tol(nu, DEFAULT_ROOT_TOL)
    }

    pub fn with_tol(nu: f64, tol: f64) -> Result<Self> {
        let order = BesselOrder::new(nu)?;
        if !(tol > 0.0) {
            return Err(Error::Domain { what: "root tolerance", value: tol });
        }
        let a = nu;
        let f_a = j_value(nu, a)?;
        Ok(BesselZeros { order, tol, found: 0, a, f_a, failed: false })
    }

    pub fn order(&self) -> BesselOrder {
        self.order
    }

    fn next_zero(&mut self) -> Result<BesselZero> {
        let nu = self.order.value();
        let index = self.found + 1;
        let limit = 2.0 * mcmahon(nu, index + 1).max(nu) + 10.0;
        loop {
            if self.a > limit {
                return Err(Error::Bracket { what: "bessel J zero", order: nu, index });
            }
            let b = self.a + SCAN_STEP;
            let f_b = j_value(nu, b)?;
            if f_b == 0.0 {
                self.a = b + 0.5 * SCAN_STEP;
                self.f_a = j_value(nu, self.a)?;
                self.found = index;
                return Ok(BesselZero { order: self.order, index, z: b });
            }
            if self.f_a != 0.0 && (self.f_a < 0.0) != (f_b < 0.0) {
                let z = newton_bisect_bracketed(
                    |x| {
                        let v = jy_unchecked(nu, x)?;
                        Ok((v.j, v.j_prime))
                    },
                    self.a,
                    b,
                    self.f_a,
                    self.tol,
                    "bessel J zero",
                )?;
                self.a = b;
                self.f_a = f_b;
                self.found = index;
                return Ok(BesselZero { order: self.order, index, z });
            }
            self.a = b;
            self.f_a = f_b;
        }
    }
}

impl Iterator for BesselZeros {
    type Item = Result<BesselZero>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let r = self.next_zero();
        if r.is_err() {
            self.failed = true;
        }
        Some(r)
    }
}

/// The `n_r`-th positive zero of `J_ν` (1-based).
pub fn bessel_j_zero(nu: f64, n_r: usize) -> Result<BesselZero> {
    bessel_j_zero_with_tol(nu, n_r, DEFAULT_ROOT_TOL)
}

pub fn bessel_j_zero_with_tol(nu: f64, n_r: usize, tol: f64) -> Result<BesselZero> {
    if n_r == 0 {
        return Err(Error::Domain { what: "zero index", value: 0.0 });
    }
    let mut zeros = BesselZeros::with_tol(nu, tol)?;
    let mut last = None;
    for _ in 0..n_r {
        last = zeros.next();
    }
    last.expect("n_r >= 1")
}
