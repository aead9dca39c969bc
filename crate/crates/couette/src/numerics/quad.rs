//! Adaptive Simpson quadrature and cached cumulative integrals.

use super::Interval;
use crate::{Error, Result};

const MAX_DEPTH: u32 = 52;

/// Integrates `f` over `iv` with absolute error at most `tol` on smooth
/// integrands, by adaptive Simpson with interval halving and a Richardson
/// error estimate.
pub fn integrate<F: Fn(f64) -> f64>(f: F, iv: Interval, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "quadrature tol must be positive, got {tol}"
        )));
    }
    let (a, b) = (iv.lo(), iv.hi());
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    if !(fa.is_finite() && fb.is_finite() && fm.is_finite()) {
        return Err(Error::InvalidArgument(
            "integrand returned a non-finite value".to_string(),
        ));
    }
    let whole = simpson(a, b, fa, fm, fb);
    let mut state = AdaptState {
        failed: false,
        err_bound: 0.0,
    };
    let value = adapt(&f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH, &mut state);
    if state.failed {
        return Err(Error::AccuracyFailure {
            estimate: value,
            error_bound: state.err_bound,
        });
    }
    Ok(value)
}

struct AdaptState {
    failed: bool,
    err_bound: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    state: &mut AdaptState,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol || !delta.is_finite() {
        if !delta.is_finite() {
            state.failed = true;
            state.err_bound = f64::INFINITY;
            return whole;
        }
        return left + right + delta / 15.0;
    }
    if depth == 0 {
        state.failed = true;
        state.err_bound += delta.abs() / 15.0;
        return left + right + delta / 15.0;
    }
    let half_tol = 0.5 * tol;
    adapt(f, a, m, fa, flm, fm, left, half_tol, depth - 1, state)
        + adapt(f, m, b, fm, frm, fb, right, half_tol, depth - 1, state)
}

/// A cached antiderivative `x -> int_lo^x f` on a uniform grid with cubic
/// Hermite interpolation; the interpolant's slopes are the exact integrand
/// values, so the evaluation error is O(h^4).
#[derive(Debug, Clone)]
pub struct CumulativeProfile {
    lo: f64,
    h: f64,
    values: Vec<f64>,
    slopes: Vec<f64>,
}

impl CumulativeProfile {
    /// Builds the cumulative integral of `f` over `[lo, hi]` with `n_cells`
    /// uniform cells (n_cells + 1 stored nodes). Each cell is integrated by
    /// Simpson with one Richardson refinement, which is already at rounding
    /// level for the cell widths used here.
    pub fn build<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, n_cells: usize) -> Self {
        let n_cells = n_cells.max(4);
        let h = (hi - lo) / n_cells as f64;
        let mut values = Vec::with_capacity(n_cells + 1);
        let mut slopes = Vec::with_capacity(n_cells + 1);
        values.push(0.0);
        let mut fa = f(lo);
        slopes.push(fa);
        let mut acc = 0.0;
        for i in 0..n_cells {
            let a = lo + i as f64 * h;
            let b = lo + (i + 1) as f64 * h;
            let m = 0.5 * (a + b);
            let fm = f(m);
            let fb = f(b);
            let s1 = simpson(a, b, fa, fm, fb);
            let flm = f(0.5 * (a + m));
            let frm = f(0.5 * (m + b));
            let s2 = simpson(a, m, fa, flm, fm) + simpson(m, b, fm, frm, fb);
            acc += s2 + (s2 - s1) / 15.0;
            values.push(acc);
            slopes.push(fb);
            fa = fb;
        }
        CumulativeProfile {
            lo,
            h,
            values,
            slopes,
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.lo + self.h * (self.values.len() - 1) as f64
    }

    /// Total integral over the build interval.
    pub fn total(&self) -> f64 {
        *self.values.last().unwrap()
    }

    /// Evaluates the antiderivative at `x` (clamped to the build interval).
    pub fn eval(&self, x: f64) -> f64 {
        let n = self.values.len() - 1;
        let t = ((x - self.lo) / self.h).clamp(0.0, n as f64);
        let i = (t.floor() as usize).min(n - 1);
        let s = t - i as f64;
        let (v0, v1) = (self.values[i], self.values[i + 1]);
        let (d0, d1) = (self.slopes[i] * self.h, self.slopes[i + 1] * self.h);
        // cubic Hermite basis
        let s2 = s * s;
        let s3 = s2 * s;
        (2.0 * s3 - 3.0 * s2 + 1.0) * v0
            + (s3 - 2.0 * s2 + s) * d0
            + (-2.0 * s3 + 3.0 * s2) * v1
            + (s3 - s2) * d1
    }
}
