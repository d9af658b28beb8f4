//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the library.

#![allow(dead_code)]

pub mod reference;

use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `Γ(ν + 1)` for integer or half-odd-integer `ν ≥ 0`, by recursion.
fn gamma_nu_plus_one(nu: f64) -> f64 {
    let (mut g, mut a) = if nu.fract() == 0.0 { (1.0, 1.0) } else { (PI.sqrt(), 0.5) };
    while a < nu + 1.0 - 1e-9 {
        g *= a;
        a += 1.0;
    }
    g
}

/// Ascending power series for `J_ν(z)`, integer or half-odd-integer `ν`.
/// Good to about `1e-13` absolute for `z ≤ 12`.
pub fn j_series(nu: f64, z: f64) -> f64 {
    let q = -(z * z) / 4.0;
    let mut term = (z / 2.0).powf(nu) / gamma_nu_plus_one(nu);
    let mut sum = term;
    for k in 1..200 {
        let k = k as f64;
        term *= q / (k * (k + nu));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// `Y_0(z)` from its logarithmic series.
pub fn y0_series(z: f64) -> f64 {
    let q = -(z * z) / 4.0;
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut tail = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        let add = -term * harmonic;
        tail += add;
        if add.abs() < 1e-18 {
            break;
        }
    }
    2.0 / PI * (((z / 2.0).ln() + EULER_GAMMA) * j_series(0.0, z) + tail)
}

/// Plain bisection on a sign change, to full double precision.
pub fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    assert!(fa * f(b) <= 0.0, "no sign change on [{a}, {b}]");
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// First root of `f` on `[a, b]`, found by scanning `steps` cells then bisecting.
pub fn scan_bisect(f: impl Fn(f64) -> f64, a: f64, b: f64, steps: usize) -> f64 {
    let h = (b - a) / steps as f64;
    let mut x0 = a;
    let mut f0 = f(x0);
    for i in 1..=steps {
        let x1 = a + h * i as f64;
        let f1 = f(x1);
        if (f0 < 0.0) != (f1 < 0.0) {
            return bisect(&f, x0, x1);
        }
        x0 = x1;
        f0 = f1;
    }
    panic!("no root on [{a}, {b}]");
}

/// Centered difference.
pub fn central_diff(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Second-order one-sided difference; `h < 0` looks to the left.
pub fn one_sided_diff(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h)
}

/// Composite Simpson rule with `n` (even) intervals.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = n + n % 2;
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + h * i as f64);
    }
    s * h / 3.0
}

/// Spherical Bessel `j_n` for `n ≤ 2` from the elementary closed forms.
pub fn spherical_closed(n: u32, z: f64) -> f64 {
    let (s, c) = z.sin_cos();
    match n {
        0 => s / z,
        1 => s / (z * z) - c / z,
        2 => (3.0 / (z * z) - 1.0) * s / z - 3.0 * c / (z * z),
        _ => unimplemented!(),
    }
}

/// Relative difference, measured against `scale`.
pub fn rel(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / scale.abs().max(f64::MIN_POSITIVE)
}
