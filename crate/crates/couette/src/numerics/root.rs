//! Bracketing root location: a scanning pass that isolates the first sign
//! change, and a bisection solver with secant acceleration.

use super::Interval;
use crate::{Error, Result};

/// Finds a root of `f` inside `bracket`, which must straddle a sign change.
///
/// Alternates bisection with a secant candidate (taken only when it lands
/// safely inside the bracket), so convergence is guaranteed and the iterate
/// sequence is invariant under scaling `f -> c f`. Stops when the bracket
/// width drops below `tol` or an iterate hits the root exactly.
pub fn find_root<F: Fn(f64) -> f64>(f: F, bracket: Interval, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "root tol must be positive, got {tol}"
        )));
    }
    let (mut lo, mut hi) = (bracket.lo(), bracket.hi());
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || !flo.is_finite() || !fhi.is_finite() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let mut use_secant = false;
    while hi - lo > tol {
        let width = hi - lo;
        let mut x = 0.5 * (lo + hi);
        if use_secant {
            let s = hi - fhi * (hi - lo) / (fhi - flo);
            // accept only well inside the bracket so the width keeps shrinking
            if s > lo + 0.125 * width && s < hi - 0.125 * width {
                x = s;
            }
        }
        use_secant = !use_secant;
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if !fx.is_finite() {
            return Err(Error::InvalidArgument(format!("f({x}) is not finite")));
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Scans forward from `start` in increments of `step` and returns the first
/// subinterval on which `f` changes sign. Guarantees the *first* sign change
/// after `start` at the scan resolution, which combined with [`find_root`]
/// yields the first root.
pub fn scan_first_bracket<F: Fn(f64) -> f64>(
    f: F,
    start: f64,
    step: f64,
    max_x: f64,
) -> Result<Interval> {
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "scan step must be positive, got {step}"
        )));
    }
    if !(start < max_x) {
        return Err(Error::InvalidArgument(format!(
            "scan requires start < max_x, got start = {start}, max_x = {max_x}"
        )));
    }
    let mut a = start;
    let mut fa = f(a);
    while a < max_x {
        let b = (a + step).min(max_x);
        let fb = f(b);
        if fa == 0.0 || fa.signum() != fb.signum() {
            return Interval::new(a, b);
        }
        a = b;
        fa = fb;
        if b >= max_x {
            break;
        }
    }
    Err(Error::BracketNotFound { start, max_x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn cosine_root_is_half_pi() {
        let iv = Interval::new(1.0, 2.0).unwrap();
        let r = find_root(f64::cos, iv, 1e-12).unwrap();
        assert!((r - PI / 2.0).abs() < 1e-11, "got {r}");
    }

    #[test]
    fn sqrt_two() {
        let iv = Interval::new(1.0, 2.0).unwrap();
        let r = find_root(|x| x * x - 2.0, iv, 1e-10).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-9, "got {r}");
    }

    #[test]
    fn no_sign_change_is_reported() {
        let iv = Interval::new(1.0, 2.0).unwrap();
        assert!(matches!(
            find_root(|x| x * x + 1.0, iv, 1e-10),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn result_invariant_under_scaling() {
        let iv = Interval::new(0.2, 1.9).unwrap();
        let g = |x: f64| x.cos() - x;
        let r1 = find_root(g, iv, 1e-13).unwrap();
        for c in [3.0, -17.0, 1e-9, 2.5e8] {
            let rc = find_root(|x| c * g(x), iv, 1e-13).unwrap();
            assert_eq!(r1.to_bits(), rc.to_bits(), "scale {c}");
        }
    }

    #[test]
    fn scan_finds_pi() {
        let iv = scan_first_bracket(f64::sin, 0.5, 0.25, 10.0).unwrap();
        assert!(iv.lo() <= PI && PI <= iv.hi());
        assert!(iv.width() <= 0.25 + 1e-12);
    }

    #[test]
    fn scan_constant_not_found() {
        assert!(matches!(
            scan_first_bracket(|_| 1.0, 0.0, 0.5, 5.0),
            Err(Error::BracketNotFound { .. })
        ));
    }

    #[test]
    fn scan_then_solve_picks_first_root() {
        // sin has roots at pi, 2 pi, ...; the scan must isolate pi.
        let iv = scan_first_bracket(f64::sin, 0.5, 0.25, 30.0).unwrap();
        let r = find_root(f64::sin, iv, 1e-12).unwrap();
        assert!((r - PI).abs() < 1e-11);
    }
}
