//! Composite Gauss–Legendre quadrature with adaptive panel bisection.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Error, Result};

/// Points per panel.
pub const PANEL_POINTS: usize = 32;

const MAX_DEPTH: u32 = 40;
const MAX_PANELS: usize = 20_000;

/// Nodes and weights of an `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = alloc::vec![0.0; n];
        let mut weights = alloc::vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = libm::cos(PI * (i as f64 + 0.75) / (nf + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                // Three-term recurrence for P_n and its derivative.
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                let pn = if n == 1 { x } else { p1 };
                let pn1 = if n == 1 { 1.0 } else { p0 };
                dp = nf * (x * pn - pn1) / (x * x - 1.0);
                let dx = pn / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Applies the rule on `[a, b]`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut s = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(mid + half * x);
        }
        s * half
    }
}

/// Adaptive integration of `f` over the panels delimited by `breakpoints`
/// (increasing, at least two points).
///
/// Each panel is split in half until the two halves agree with the whole to
/// `rel_tol` of the running total, apportioned by panel length.
pub fn integrate_adaptive<F: FnMut(f64) -> f64>(mut f: F, breakpoints: &[f64], rel_tol: f64) -> Result<f64> {
    if breakpoints.len() < 2 {
        return Err(Error::Domain { what: "quadrature breakpoints", value: breakpoints.len() as f64 });
    }
    let rule = GaussLegendre::new(PANEL_POINTS);
    let lo = breakpoints[0];
    let hi = breakpoints[breakpoints.len() - 1];
    let length = hi - lo;
    if !(length > 0.0) {
        return Err(Error::Domain { what: "quadrature interval", value: length });
    }

    let mut stack: Vec<(f64, f64, f64, u32)> = Vec::with_capacity(64);
    let mut scale = 0.0;
    for w in breakpoints.windows(2) {
        let (a, b) = (w[0], w[1]);
        if !(b > a) {
            return Err(Error::Domain { what: "quadrature breakpoints", value: b });
        }
        let whole = rule.integrate(&mut f, a, b);
        scale += whole.abs();
        stack.push((a, b, whole, 0));
    }
    stack.reverse();

    let mut total = 0.0;
    let mut compensation = 0.0;
    let mut panels = 0usize;
    while let Some((a, b, whole, depth)) = stack.pop() {
        panels += 1;
        if panels > MAX_PANELS {
            return Err(Error::NoConvergence { what: "adaptive quadrature" });
        }
        let m = 0.5 * (a + b);
        let left = rule.integrate(&mut f, a, m);
        let right = rule.integrate(&mut f, m, b);
        let refined = left + right;
        if !refined.is_finite() {
            return Err(Error::NoConvergence { what: "adaptive quadrature" });
        }
        let allowed = rel_tol * scale.max(f64::MIN_POSITIVE) * (b - a) / length;
        if (refined - whole).abs() <= allowed || (refined - whole).abs() <= 1e-15 * refined.abs() {
            // Kahan summation keeps thousands of panels from eroding accuracy.
            let y = refined - compensation;
            let t = total + y;
            compensation = (t - total) - y;
            total = t;
        } else if depth >= MAX_DEPTH {
            return Err(Error::NoConvergence { what: "adaptive quadrature" });
        } else {
            stack.push((m, b, right, depth + 1));
            stack.push((a, m, left, depth + 1));
        }
    }
    Ok(total)
}

/// Breakpoints on `[a, b]` split into `n` equal panels, with extra geometric
/// panels packed toward `a` (for integrands with a weak singularity there).
pub fn graded_breakpoints(a: f64, b: f64, n: usize, grading_levels: u32) -> Vec<f64> {
    let n = n.max(1);
    let h = (b - a) / n as f64;
    let mut pts = Vec::with_capacity(n + grading_levels as usize + 1);
    pts.push(a);
    for level in (1..=grading_levels).rev() {
        pts.push(a + h * libm::ldexp(1.0, -(level as i32)));
    }
    for i in 1..=n {
        pts.push(if i == n { b } else { a + h * i as f64 });
    }
    pts
}
