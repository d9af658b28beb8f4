//! Cylindrical Bessel functions `J_ν`, `Y_ν` of real order `ν ≥ 0` and real
//! argument.
//!
//! Evaluation follows Temme and Steed: the ratio `J'_ν/J_ν` comes from a
//! continued fraction, `J` is recurred downward to an order `μ` with small
//! magnitude, and the pair `(J_μ, Y_μ)` is fixed from Temme's series (`x < 2`)
//! or Steed's complex continued fraction (`x ≥ 2`) together with the
//! Wronskian. `Y` is then recurred upward, which is the stable direction.

use core::f64::consts::PI;

use libm::{cosh, exp, log, sin, sinh, sqrt};

use crate::{Error, Result};

const EPS: f64 = 1e-16;
const FPMIN: f64 = f64::MIN_POSITIVE / EPS;
const MAX_ITER: usize = 100_000;
const XMIN: f64 = 2.0;
const RESCALE_ABOVE: f64 = 1e250;
const RESCALE_BY: f64 = 1e-250;

/// Taylor coefficients of `1/Γ(1 + x)` about `x = 0`.
const RGAMMA1P: [f64; 26] = [
    1.0,
    0.577_215_664_901_532_9,
    -0.655_878_071_520_253_9,
    -0.042_002_635_034_095_24,
    0.166_538_611_382_291_5,
    -0.042_197_734_555_544_34,
    -0.009_621_971_527_876_974,
    0.007_218_943_246_663_1,
    -0.001_165_167_591_859_065,
    -0.000_215_241_674_114_951,
    0.000_128_050_282_388_116_2,
    -2.013_485_478_078_824e-5,
    -1.250_493_482_142_671e-6,
    1.133_027_231_981_696e-6,
    -2.056_338_416_977_607e-7,
    6.116_095_104_481_416e-9,
    5.002_007_644_469_223e-9,
    -1.181_274_570_487_02e-9,
    1.043_426_711_691_1e-10,
    7.782_263_439_905_071e-12,
    -3.696_805_618_642_206e-12,
    5.100_370_287_454_476e-13,
    -2.058_326_053_566_507e-14,
    -5.348_122_539_423_018e-15,
    1.226_778_628_238_261e-15,
    -1.181_259_301_697_459e-16,
];

/// Temme's auxiliary gamma quantities for `|μ| ≤ 1/2`:
/// `(Γ₁, Γ₂, 1/Γ(1+μ), 1/Γ(1−μ))` with
/// `Γ₁ = (1/Γ(1−μ) − 1/Γ(1+μ))/(2μ)` and `Γ₂ = (1/Γ(1−μ) + 1/Γ(1+μ))/2`.
fn temme_gamma(mu: f64) -> (f64, f64, f64, f64) {
    let mu2 = mu * mu;
    let mut even = 0.0;
    let mut odd = 0.0;
    // Horner over μ² for the even and odd halves.
    for k in (0..RGAMMA1P.len()).rev() {
        if k % 2 == 0 {
            even = even * mu2 + RGAMMA1P[k];
        } else {
            odd = odd * mu2 + RGAMMA1P[k];
        }
    }
    let gam1 = -odd;
    let gam2 = even;
    (gam1, gam2, gam2 - mu * gam1, gam2 + mu * gam1)
}

/// `J_ν`, `Y_ν` and their derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselJY {
    pub j: f64,
    pub y: f64,
    pub j_prime: f64,
    pub y_prime: f64,
}

fn check_order(nu: f64, what: &'static str) -> Result<()> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::Domain { what, value: nu });
    }
    Ok(())
}

/// Hankel's asymptotic expansion for `(J_μ, Y_μ)`, accurate to rounding for
/// `x ≥ 25` and `|μ| ≤ 1/2`.
fn hankel_asymptotic(mu: f64, x: f64) -> (f64, f64) {
    let four_mu2 = 4.0 * mu * mu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (four_mu2 - odd * odd) / (k as f64 * 8.0 * x);
        let mag = term.abs();
        if mag > prev {
            break;
        }
        prev = mag;
        // Signs follow (−1)^⌊k/2⌋ for both P (even k) and Q (odd k).
        let signed = if (k / 2) % 2 == 0 { term } else { -term };
        if k % 2 == 0 {
            p += signed;
        } else {
            q += signed;
        }
        if mag < 1e-17 * p.abs() {
            break;
        }
    }
    let phase = (0.5 * mu + 0.25) * PI;
    let (sx, cx) = (sin(x), libm::cos(x));
    let (sp, cp) = (sin(phase), libm::cos(phase));
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    let amp = sqrt(2.0 / (PI * x));
    (amp * (p * cos_chi - q * sin_chi), amp * (p * sin_chi + q * cos_chi))
}

/// Large-argument route: start from orders `μ`, `μ + 1` with `|μ| ≤ 1/2`
/// and recur upward, which is stable for both kinds while `ν < x`.
fn jy_large_x(nu: f64, x: f64) -> BesselJY {
    let n = libm::floor(nu + 0.5);
    let mu = nu - n;
    let (mut j0, mut y0) = hankel_asymptotic(mu, x);
    let (mut j1, mut y1) = hankel_asymptotic(mu + 1.0, x);
    let mut order = mu + 1.0;
    for _ in 0..(n as usize) {
        let two_over = 2.0 * order / x;
        let (j2, y2) = (two_over * j1 - j0, two_over * y1 - y0);
        j0 = j1;
        y0 = y1;
        j1 = j2;
        y1 = y2;
        order += 1.0;
    }
    let r = nu / x;
    BesselJY { j: j0, y: y0, j_prime: r * j0 - j1, y_prime: r * y0 - y1 }
}

/// Argument above which the asymptotic route is used (when `ν ≤ x/2`).
const ASYMPTOTIC_X: f64 = 25.0;

/// Joint evaluation for `x > 0`. `Y` may come back infinite when it
/// overflows; the public wrappers turn that into [`Error::Overflow`].
pub(crate) fn jy_unchecked(nu: f64, x: f64) -> Result<BesselJY> {
    if x >= ASYMPTOTIC_X && nu <= 0.5 * x {
        return Ok(jy_large_x(nu, x));
    }
    let nl = if x < XMIN {
        (nu + 0.5) as usize
    } else {
        let t = nu - x + 1.5;
        if t > 0.0 { t as usize } else { 0 }
    };
    let mu = nu - nl as f64;
    let mu2 = mu * mu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: J'_ν/J_ν, with the sign of J_ν tracked through the denominators.
    let mut isign = 1.0;
    let mut h = nu * xi;
    if h < FPMIN {
        h = FPMIN;
    }
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { what: "bessel CF1" });
    }

    // Downward recurrence from ν to μ on an arbitrary scale.
    let mut rjl = isign;
    let mut rjpl = h * rjl;
    let mut rjl1 = rjl;
    let mut rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if rjl.abs() > RESCALE_ABOVE {
            rjl *= RESCALE_BY;
            rjpl *= RESCALE_BY;
            rjl1 *= RESCALE_BY;
            rjp1 *= RESCALE_BY;
        }
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, mut rymu, mut ry1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * mu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / sin(pimu) };
        let d = -log(x2);
        let e = mu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { sinh(e) / e };
        let (gam1, gam2, gampl, gammi) = temme_gamma(mu);
        let mut ff = 2.0 / PI * fact * (gam1 * cosh(e) + gam2 * fact2 * d);
        let e = exp(e);
        let mut p = e / (gampl * PI);
        let mut q = 1.0 / (e * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fact3 = if pimu2.abs() < EPS { 1.0 } else { sin(pimu2) / pimu2 };
        let r = PI * pimu2 * fact3 * fact3;
        let mut c = 1.0;
        let d = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut converged = false;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - mu2);
            c *= d / fi;
            p /= fi - mu;
            q /= fi + mu;
            let del = c * (ff + r * q);
            sum += del;
            let del1 = c * p - fi * del;
            sum1 += del1;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence { what: "bessel Temme series" });
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = mu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2 (Steed): p + iq = (J'_μ + iY'_μ)/(J_μ + iY_μ) by modified Lentz.
        let mut a = 0.25 - mu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        let mut converged = false;
        for i in 2..MAX_ITER {
            a += 2.0 * (i as f64 - 1.0);
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() < EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence { what: "bessel CF2" });
        }
        let gam = (p - f) / q;
        let mag = sqrt(w / ((p - f) * gam + q));
        rjmu = if rjl < 0.0 { -mag } else { mag };
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = mu * xi * rymu - rymup;
    }

    let scale = rjmu / rjl;
    let j = rjl1 * scale;
    let j_prime = rjp1 * scale;
    for i in 1..=nl {
        let rytemp = (mu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
        if !rymu.is_finite() {
            break;
        }
    }
    let y = rymu;
    let y_prime = nu * xi * rymu - ry1;
    Ok(BesselJY { j, y, j_prime, y_prime })
}

/// `J_ν`, `Y_ν`, `J'_ν`, `Y'_ν` at `x > 0`.
pub fn bessel_jy(nu: f64, x: f64) -> Result<BesselJY> {
    check_order(nu, "bessel order")?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain { what: "bessel argument", value: x });
    }
    let v = jy_unchecked(nu, x)?;
    if !v.y.is_finite() || !v.y_prime.is_finite() {
        return Err(Error::Overflow { what: "bessel Y" });
    }
    Ok(v)
}

/// `J_ν(z)` for `z ≥ 0`.
pub fn bessel_j(nu: f64, z: f64) -> Result<f64> {
    check_order(nu, "bessel order")?;
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::Domain { what: "bessel argument", value: z });
    }
    if z == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    let v = jy_unchecked(nu, z)?;
    if !v.j.is_finite() {
        return Err(Error::Overflow { what: "bessel J" });
    }
    Ok(v.j)
}

/// `J'_ν(z)` for `z ≥ 0`. At `z = 0` the derivative is infinite for
/// `0 < ν < 1`, which is reported as an overflow.
pub fn bessel_j_prime(nu: f64, z: f64) -> Result<f64> {
    check_order(nu, "bessel order")?;
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::Domain { what: "bessel argument", value: z });
    }
    if z == 0.0 {
        return if nu == 1.0 {
            Ok(0.5)
        } else if nu == 0.0 || nu > 1.0 {
            Ok(0.0)
        } else {
            Err(Error::Overflow { what: "bessel J' at the origin" })
        };
    }
    Ok(jy_unchecked(nu, z)?.j_prime)
}

/// `Y_ν(z)` for `z > 0`.
pub fn bessel_y(nu: f64, z: f64) -> Result<f64> {
    Ok(bessel_jy(nu, z)?.y)
}

/// `Y'_ν(z)` for `z > 0`.
pub fn bessel_y_prime(nu: f64, z: f64) -> Result<f64> {
    Ok(bessel_jy(nu, z)?.y_prime)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn temme_gamma_at_zero() {
        let (g1, g2, gp, gm) = temme_gamma(0.0);
        assert!((g1 + 0.577_215_664_901_532_9).abs() < 1e-16);
        assert_eq!(g2, 1.0);
        assert_eq!(gp, 1.0);
        assert_eq!(gm, 1.0);
    }

    #[test]
    fn temme_gamma_half() {
        // 1/Γ(3/2) = 2/√π and 1/Γ(1/2) = 1/√π.
        let (_, _, gp, gm) = temme_gamma(0.5);
        let rpi = 1.0 / PI.sqrt();
        assert!((gp - 2.0 * rpi).abs() < 1e-15);
        assert!((gm - rpi).abs() < 1e-15);
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(2.5, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j_prime(0.0, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j_prime(1.0, 0.0).unwrap(), 0.5);
        assert!(bessel_j_prime(0.5, 0.0).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(bessel_j(-1.0, 1.0), Err(Error::Domain { .. })));
        assert!(matches!(bessel_j(1.0, -1.0), Err(Error::Domain { .. })));
        assert!(matches!(bessel_y(0.0, 0.0), Err(Error::Domain { .. })));
        assert!(matches!(bessel_y(f64::NAN, 1.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn y_overflow_is_explicit() {
        assert!(matches!(bessel_y(100.0, 1e-3), Err(Error::Overflow { .. })));
        // J underflows quietly instead.
        assert!(bessel_j(100.0, 1e-3).unwrap() >= 0.0);
    }

    #[test]
    fn half_order_closed_forms() {
        for &x in &[0.3, 1.0, 1.9, 2.0, 5.0, 40.0, 333.3] {
            let s = (2.0 / (PI * x)).sqrt();
            let v = bessel_jy(0.5, x).unwrap();
            assert!((v.j - s * libm::sin(x)).abs() < 1e-14 * s.max(1.0), "J x={x}");
            assert!((v.y + s * libm::cos(x)).abs() < 1e-14 * s.max(1.0), "Y x={x}");
        }
    }
}
