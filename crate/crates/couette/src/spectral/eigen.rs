//! First Laplace-Dirichlet eigenvalue of the annulus via the Bessel
//! cross-product equation `Y0(a) J0(a/R) = J0(a) Y0(a/R)`.

use crate::numerics::{
    bessel_j0_raw, bessel_j1_raw, bessel_y0_raw, bessel_y1_raw, cross_product_raw, find_root,
    scan_first_bracket,
};
use crate::solutions::{Annulus, RadialProfile};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Scan resolution for locating the first cross-product root. Root spacing
/// stays above 0.4 over the radii of interest.
const SCAN_STEP: f64 = 0.05;
const SCAN_START: f64 = 1e-3;
const ROOT_TOL: f64 = 1e-10;

/// First root of the cross-product equation together with the eigenvalue and
/// the analytic sandwich bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResult {
    /// First root of the cross-product equation.
    pub alpha: f64,
    /// `lambda(Omega_R) = (alpha/R)^2`.
    pub lambda: f64,
    /// Lower bound `pi^2 / (2 R^2)`.
    pub lower: f64,
    /// Upper bound `10 / (R-1)^2`.
    pub upper: f64,
}

/// Computes the first eigenvalue by scanning for the first sign change of the
/// cross product and polishing with the bracketing solver.
pub fn eigenvalue(ann: &Annulus) -> Result<EigenResult> {
    let r = ann.outer();
    // lambda <= 10/(R-1)^2 gives alpha <= sqrt(10) R/(R-1); pad the cutoff.
    let max_alpha = 4.0 * r / (r - 1.0) + 8.0;
    let f = |a: f64| cross_product_raw(a, r);
    let bracket = scan_first_bracket(f, SCAN_START, SCAN_STEP, max_alpha)?;
    let alpha = find_root(f, bracket, ROOT_TOL)?;
    let lambda = (alpha / r) * (alpha / r);
    let lower = PI * PI / (2.0 * r * r);
    let upper = 10.0 / ((r - 1.0) * (r - 1.0));
    if !(lower <= lambda && lambda <= upper) {
        return Err(Error::Inconsistency(format!(
            "eigenvalue sandwich violated at R = {r}: {lower} <= {lambda} <= {upper}"
        )));
    }
    Ok(EigenResult {
        alpha,
        lambda,
        lower,
        upper,
    })
}

/// The radial eigenfunction
/// `F(rho) = Y0(alpha) J0(alpha rho / R) - J0(alpha) Y0(alpha rho / R)`,
/// vanishing at both circles, with its analytic derivative.
pub fn eigenfunction(ann: &Annulus) -> Result<RadialProfile> {
    let r = ann.outer();
    let alpha = eigenvalue(ann)?.alpha;
    let ya = bessel_y0_raw(alpha);
    let ja = bessel_j0_raw(alpha);
    let scale = alpha / r;
    Ok(RadialProfile::analytic_with_derivative(
        "eigenfunction",
        move |rho| ya * bessel_j0_raw(scale * rho) - ja * bessel_y0_raw(scale * rho),
        // J0' = -J1, Y0' = -Y1
        move |rho| -scale * (ya * bessel_j1_raw(scale * rho) - ja * bessel_y1_raw(scale * rho)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_row_r2() {
        let e = eigenvalue(&Annulus::new(2.0).unwrap()).unwrap();
        assert!((e.alpha - 6.2461).abs() < 5e-4, "alpha {}", e.alpha);
        // consistent with the root to full precision
        assert!((e.alpha - 6.246_061_839_191_384).abs() < 1e-8);
        assert!((e.lambda - 9.753_322_124_750_715).abs() < 1e-7);
    }

    #[test]
    fn table_row_r100() {
        let e = eigenvalue(&Annulus::new(100.0).unwrap()).unwrap();
        assert!((e.alpha - 2.8009).abs() < 5e-4, "alpha {}", e.alpha);
        assert!((e.lambda - 7.845_162_678_444_5e-4).abs() < 1e-9);
    }

    #[test]
    fn scan_isolates_first_root_at_r10() {
        // the first cross-product root for R = 10 sits at 3.3139
        let f = |a: f64| cross_product_raw(a, 10.0);
        let bracket = scan_first_bracket(f, 0.1, SCAN_STEP, 50.0).unwrap();
        assert!(
            bracket.lo() <= 3.3139 && 3.3139 <= bracket.hi(),
            "bracket {bracket:?}"
        );
    }

    #[test]
    fn sandwich_holds_across_radii() {
        for r in [1.1, 1.5, 2.0, 5.0, 10.0, 100.0] {
            let e = eigenvalue(&Annulus::new(r).unwrap()).unwrap();
            assert!(e.lower <= e.lambda && e.lambda <= e.upper, "R = {r}");
        }
    }

    #[test]
    fn eigenvalue_decreasing_in_radius() {
        let mut prev = f64::INFINITY;
        for r in [1.1, 1.3, 2.0, 4.0, 10.0, 100.0] {
            let e = eigenvalue(&Annulus::new(r).unwrap()).unwrap();
            assert!(e.lambda < prev, "lambda must decrease, R = {r}");
            prev = e.lambda;
        }
    }

    #[test]
    fn eigenfunction_vanishes_on_both_circles() {
        let ann = Annulus::new(2.0).unwrap();
        let f = eigenfunction(&ann).unwrap();
        assert!(f.eval(1.0).abs() <= 1e-8, "F(1) = {}", f.eval(1.0));
        assert!(f.eval(2.0).abs() <= 1e-8, "F(R) = {}", f.eval(2.0));
        // frozen interior value
        assert!((f.eval(1.5) - 0.117_195_391_197_008).abs() < 1e-9);
    }

    #[test]
    fn eigenfunction_single_signed_inside() {
        let ann = Annulus::new(3.0).unwrap();
        let f = eigenfunction(&ann).unwrap();
        let sign = f.eval(2.0).signum();
        for i in 1..100 {
            let rho = 1.0 + 2.0 * i as f64 / 100.0;
            assert_eq!(f.eval(rho).signum(), sign, "sign change at rho = {rho}");
        }
    }

    #[test]
    fn eigenfunction_satisfies_radial_equation() {
        // -(F'' + F'/rho) = lambda F, finite differences at O(h^2)
        let ann = Annulus::new(2.0).unwrap();
        let e = eigenvalue(&ann).unwrap();
        let f = eigenfunction(&ann).unwrap();
        let h = 1e-5;
        for rho in [1.2, 1.5, 1.8] {
            let fpp = (f.eval(rho + h) - 2.0 * f.eval(rho) + f.eval(rho - h)) / (h * h);
            let fp = (f.eval(rho + h) - f.eval(rho - h)) / (2.0 * h);
            let residual = -(fpp + fp / rho) - e.lambda * f.eval(rho);
            assert!(residual.abs() < 1e-5, "rho {rho}: residual {residual}");
        }
        // analytic derivative agrees with finite differences
        for rho in [1.2, 1.7] {
            let fd = (f.eval(rho + h) - f.eval(rho - h)) / (2.0 * h);
            assert!((f.deriv(rho).unwrap() - fd).abs() < 1e-8);
        }
    }
}
