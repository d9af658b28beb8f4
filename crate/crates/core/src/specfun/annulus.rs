use core::f64::consts::PI;

use super::bessel::jy_unchecked;
use super::{BesselOrder, BesselZero};
use crate::roots::{newton_bisect_bracketed, DEFAULT_ROOT_TOL};
use crate::{Error, Result};

fn check(nu: f64, f: f64) -> Result<()> {
    BesselOrder::new(nu)?;
    if !(f > 0.0 && f < 1.0) {
        return Err(Error::Domain { what: "annulus inner radius ratio f", value: f });
    }
    Ok(())
}

/// Cross-product determinant `J_ν(kR)·Y_ν(f·kR) − J_ν(f·kR)·Y_ν(kR)` whose
/// roots in `kR` are the annulus eigen-wavenumbers for inner radius `fR`.
pub fn annulus_det(nu: f64, f: f64, kr: f64) -> Result<f64> {
    check(nu, f)?;
    if !(kr > 0.0) || !kr.is_finite() {
        return Err(Error::Domain { what: "annulus kR", value: kr });
    }
    let outer = jy_unchecked(nu, kr)?;
    let inner = jy_unchecked(nu, f * kr)?;
    if !inner.y.is_finite() || !outer.y.is_finite() {
        return Err(Error::Overflow { what: "annulus determinant" });
    }
    Ok(outer.j * inner.y - inner.j * outer.y)
}

/// The determinant and its `kR` derivative, both divided by a positive
/// scale so that neither overflows. Roots and signs are unchanged.
pub(crate) fn annulus_det_scaled(nu: f64, f: f64, x: f64) -> Result<(f64, f64)> {
    let outer = jy_unchecked(nu, x)?;
    let inner = jy_unchecked(nu, f * x)?;
    if !inner.y.is_finite() || !inner.y_prime.is_finite() {
        // J_ν(fx)/|Y_ν(fx)| is below the smallest double; Y_ν(fx) < 0 there.
        return Ok((-outer.j, -outer.j_prime));
    }
    let s = 1.0f64.max(inner.y.abs()).max(inner.y_prime.abs());
    let (yi, ypi, ji, jpi) = (inner.y / s, inner.y_prime / s, inner.j / s, inner.j_prime / s);
    let det = outer.j * yi - ji * outer.y;
    let d = outer.j_prime * yi + f * outer.j * ypi - f * jpi * outer.y - ji * outer.y_prime;
    Ok((det, d))
}

/// Iterator over the annulus roots `kR` for fixed `ν` and `f`, increasing.
#[derive(Debug, Clone)]
pub struct AnnulusZeros {
    order: BesselOrder,
    f: f64,
    tol: f64,
    step: f64,
    found: usize,
    a: f64,
    f_a: f64,
    failed: bool,
}

impl AnnulusZeros {
    pub fn new(nu: f64, f: f64) -> Result<Self> {
        Self::with_tol(nu, f, DEFAULT_ROOT_TOL)
    }

    pub fn with_tol(nu: f64, f: f64, tol: f64) -> Result<Self> {
        check(nu, f)?;
        let order = BesselOrder::new(nu)?;
        let step = (PI / 2.0).min(PI * (1.0 - f) / 4.0);
        // With v = √r·R(r) the radial problem becomes −v'' + (ν² − 1/4)/r²·v = k²v
        // on (f, 1), so k² exceeds (π/(1−f))² plus the minimum of the potential.
        let gap = PI / (1.0 - f);
        let potential_min = if nu >= 0.5 { nu * nu - 0.25 } else { (nu * nu - 0.25) / (f * f) };
        let bound2 = gap * gap + potential_min;
        let a = if bound2 > 0.0 { (libm::sqrt(bound2) * (1.0 - 1e-9)).max(step * 1e-3) } else { step * 1e-3 };
        let f_a = annulus_det_scaled(nu, f, a)?.0;
        Ok(AnnulusZeros { order, f, tol, step, found: 0, a, f_a, failed: false })
    }

    fn next_zero(&mut self) -> Result<BesselZero> {
        let nu = self.order.value();
        let f = self.f;
        let index = self.found + 1;
        let limit = 2.0 * (nu + (index + 1) as f64 * PI / (1.0 - f)) + 10.0;
        loop {
            if self.a > limit {
                return Err(Error::Bracket { what: "annulus zero", order: nu, index });
            }
            let b = self.a + self.step;
            let f_b = annulus_det_scaled(nu, f, b)?.0;
            if f_b == 0.0 {
                self.a = b + 0.5 * self.step;
                self.f_a = annulus_det_scaled(nu, f, self.a)?.0;
                self.found = index;
                return Ok(BesselZero { order: self.order, index, z: b });
            }
            if self.f_a != 0.0 && (self.f_a < 0.0) != (f_b < 0.0) {
                let z = newton_bisect_bracketed(
                    |x| annulus_det_scaled(nu, f, x),
                    self.a,
                    b,
                    self.f_a,
                    self.tol,
                    "annulus zero",
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

impl Iterator for AnnulusZeros {
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

/// The `n_r`-th root in `kR` of [`annulus_det`] (1-based).
pub fn annulus_zero(nu: f64, f: f64, n_r: usize) -> Result<BesselZero> {
    annulus_zero_with_tol(nu, f, n_r, DEFAULT_ROOT_TOL)
}

pub fn annulus_zero_with_tol(nu: f64, f: f64, n_r: usize, tol: f64) -> Result<BesselZero> {
    if n_r == 0 {
        return Err(Error::Domain { what: "zero index", value: 0.0 });
    }
    let mut zeros = AnnulusZeros::with_tol(nu, f, tol)?;
    let mut last = None;
    for _ in 0..n_r {
        last = zeros.next();
    }
    last.expect("n_r >= 1")
}
