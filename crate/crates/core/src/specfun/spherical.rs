use libm::{cos, sin, sqrt};

use crate::{Error, Result};

/// Spherical Bessel function `j_n(z) = √(π/2z)·J_{n+1/2}(z)` for `z > 0`,
/// built from `j_0 = sin z/z` and `j_1 = sin z/z² − cos z/z`.
pub fn spherical_j(n: u32, z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain { what: "spherical bessel argument", value: z });
    }
    let nf = n as f64;
    if z <= 1.0 {
        return Ok(series(n, z));
    }
    if z > nf {
        return Ok(upward(n, z));
    }
    Ok(miller(n, z))
}

fn j0(z: f64) -> f64 {
    sin(z) / z
}

fn j1(z: f64) -> f64 {
    (sin(z) / z - cos(z)) / z
}

/// `z^n/(2n+1)!! · Σ (−z²/2)^k / (k!·(2n+3)(2n+5)…(2n+2k+1))`.
fn series(n: u32, z: f64) -> f64 {
    let mut lead = 1.0;
    for k in 1..=n {
        lead *= z / (2 * k + 1) as f64;
    }
    let q = -0.5 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        term *= q / (k as f64 * (2 * n + 2 * k + 1) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn upward(n: u32, z: f64) -> f64 {
    let (mut a, mut b) = (j0(z), j1(z));
    if n == 0 {
        return a;
    }
    for k in 1..n {
        let c = (2 * k + 1) as f64 / z * b - a;
        a = b;
        b = c;
    }
    b
}

/// Downward recurrence from well above `n`, normalized against whichever of
/// `j_0`, `j_1` is larger.
fn miller(n: u32, z: f64) -> f64 {
    let top = n + 20 + sqrt(40.0 * (n as f64 + z)) as u32;
    let (mut hi, mut mid) = (0.0f64, 1e-300f64);
    let mut kept = 0.0;
    let mut f1 = 0.0;
    for k in (1..=top).rev() {
        // mid holds the unnormalized j_k, hi holds j_{k+1}.
        let lo = (2 * k + 1) as f64 / z * mid - hi;
        hi = mid;
        mid = lo;
        if mid.abs() > 1e250 {
            mid *= 1e-250;
            hi *= 1e-250;
            kept *= 1e-250;
        }
        if k - 1 == n {
            kept = mid;
        }
        if k == 1 {
            f1 = hi;
        }
    }
    let (t0, t1) = (j0(z), j1(z));
    if t0.abs() >= t1.abs() {
        kept * (t0 / mid)
    } else {
        kept * (t1 / f1)
    }
}
