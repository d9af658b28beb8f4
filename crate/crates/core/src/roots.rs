//! Bracketed one-dimensional root finding.
//!
//! Every root in this crate is found the same way: isolate a sign change,
//! then polish it with Newton steps that fall back to bisection whenever a
//! step would leave the bracket or fails to halve the previous one.

use crate::{Error, Result};

/// Default absolute tolerance on a root, in the natural variable (`z = kR`,
/// `kL` or `m`).
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

const MAX_ITER: usize = 200;

/// Solves `f(x) = 0` on `[lo, hi]`, where `f` returns the value and the
/// derivative. `f(lo)` and `f(hi)` must differ in sign (or one must vanish).
///
/// Iteration stops once a step or the bracket width drops below `tol`.
pub fn newton_bisect<F>(mut f: F, lo: f64, hi: f64, tol: f64, what: &'static str) -> Result<f64>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    let (f_lo, _) = f(lo)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    let (f_hi, _) = f(hi)?;
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if (f_lo < 0.0) == (f_hi < 0.0) {
        return Err(Error::Bracket { what, order: f64::NAN, index: 0 });
    }
    newton_bisect_bracketed(f, lo, hi, f_lo, tol, what)
}

/// Like [`newton_bisect`] when the caller already knows `f(lo)` and has
/// verified the sign change.
pub(crate) fn newton_bisect_bracketed<F>(
    mut f: F,
    lo: f64,
    hi: f64,
    f_lo: f64,
    tol: f64,
    what: &'static str,
) -> Result<f64>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    // Orient so that f(neg) < 0 < f(pos).
    let (mut neg, mut pos) = if f_lo < 0.0 { (lo, hi) } else { (hi, lo) };
    let mut x = 0.5 * (lo + hi);
    let mut dx_old = (hi - lo).abs();
    let mut dx = dx_old;
    let (mut fx, mut dfx) = f(x)?;

    for _ in 0..MAX_ITER {
        if fx == 0.0 {
            return Ok(x);
        }
        if fx < 0.0 {
            neg = x;
        } else {
            pos = x;
        }
        let (a, b) = if neg < pos { (neg, pos) } else { (pos, neg) };
        let newton_ok = dfx != 0.0 && dfx.is_finite() && {
            let step = fx / dfx;
            let cand = x - step;
            cand > a && cand < b && (2.0 * fx).abs() <= (dx_old * dfx).abs()
        };
        dx_old = dx;
        let next = if newton_ok {
            dx = fx / dfx;
            x - dx
        } else {
            dx = 0.5 * (b - a);
            a + dx
        };
        if dx.abs() <= tol || (b - a) <= tol {
            return Ok(next);
        }
        // No representable progress left.
        if next == x {
            return Ok(x);
        }
        x = next;
        let (v, d) = f(x)?;
        fx = v;
        dfx = d;
    }
    Err(Error::NoConvergence { what })
}

/// Plain bisection on a continuous `f` with `f(lo)·f(hi) ≤ 0`.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64, what: &'static str) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut f_lo = f(lo)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    let f_hi = f(hi)?;
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if (f_lo < 0.0) == (f_hi < 0.0) {
        return Err(Error::Bracket { what, order: f64::NAN, index: 0 });
    }
    for _ in 0..MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid == lo || mid == hi {
            return Ok(mid);
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence { what })
}
