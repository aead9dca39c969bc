//! Scalar coefficients and thresholds attached to the solution catalog.

use super::profile::Forcing;
use super::{Annulus, FlowField};
use crate::numerics::{integrate, Interval};
use crate::Result;
use std::f64::consts::TAU;

/// The azimuthal coefficient of the generalized Taylor-Couette flow,
/// `A_R = R/(R^2-1) [ omega + (R/2) int_1^R f_theta - (1/2R) int_1^R t^2 f_theta ]`.
#[allow(non_snake_case)]
pub fn coefficient_A(ann: &Annulus, omega: f64, forcing: &Forcing) -> Result<f64> {
    let r = ann.outer();
    let iv = Interval::new(1.0, r)?;
    let f = &forcing.f_theta;
    let m0 = integrate(|t| f.eval(t), iv, 1e-10)?;
    let m2 = integrate(|t| t * t * f.eval(t), iv, 1e-10)?;
    Ok(r / (r * r - 1.0) * (omega + 0.5 * r * m0 - 0.5 / r * m2))
}

/// The uniqueness threshold
/// `K_R(omega, f) = omega + sqrt(R-1)/(sqrt(15) R) sqrt(8R^4-7R^3-7R^2+3R+3) ||f_theta||`,
/// with the annulus norm `||f_theta|| = sqrt(2 pi int_1^R rho f_theta^2)`.
pub fn threshold_force(ann: &Annulus, omega: f64, forcing: &Forcing) -> Result<f64> {
    let r = ann.outer();
    let iv = Interval::new(1.0, r)?;
    let f = &forcing.f_theta;
    let norm_sq = TAU
        * integrate(
            |rho| {
                let v = f.eval(rho);
                rho * v * v
            },
            iv,
            1e-10,
        )?;
    let poly = 8.0 * r.powi(4) - 7.0 * r.powi(3) - 7.0 * r * r + 3.0 * r + 3.0;
    Ok(omega + (r - 1.0).sqrt() / (15.0f64.sqrt() * r) * poly.sqrt() * norm_sq.sqrt())
}

/// Threshold compared against a supplied `sqrt(lambda)` reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdCheck {
    pub k: f64,
    pub sqrt_lambda: Option<f64>,
    /// `Some(true)` when the strict inequality `K < sqrt(lambda)` certifies
    /// uniqueness in the whole space.
    pub uniqueness_certified: Option<bool>,
}

/// Evaluates the threshold and, when the annulus eigenvalue is supplied,
/// reports whether the sufficient uniqueness condition holds.
pub fn threshold_check(
    ann: &Annulus,
    omega: f64,
    forcing: &Forcing,
    lambda: Option<f64>,
) -> Result<ThresholdCheck> {
    let k = threshold_force(ann, omega, forcing)?;
    let sqrt_lambda = lambda.map(f64::sqrt);
    Ok(ThresholdCheck {
        k,
        sqrt_lambda,
        uniqueness_certified: sqrt_lambda.map(|s| k < s),
    })
}

/// Result of the maximum-modulus audit `max |v| <= K`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub max_velocity: f64,
    pub bound: f64,
    pub pass: bool,
}

/// Checks the velocity maximum-modulus bound of a generalized Taylor-Couette
/// flow against its threshold `K`, sampling 2000 radii.
pub fn sup_velocity_bound_check(field: &FlowField, k: f64) -> BoundCheck {
    let (lo, hi) = match field.domain() {
        super::FlowDomain::Annulus { r_outer } => (1.0, r_outer),
        super::FlowDomain::Disk { radius } => (0.0, radius),
        super::FlowDomain::Exterior => (1.0, 10.0),
    };
    let n = 2000;
    let mut max_v = 0.0_f64;
    for i in 0..n {
        let rho = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        if let Ok((ur, ut)) = field.velocity(rho, 0.0) {
            max_v = max_v.max((ur * ur + ut * ut).sqrt());
        }
    }
    BoundCheck {
        max_velocity: max_v,
        bound: k,
        pass: max_v <= k * (1.0 + 1e-12),
    }
}

/// The flux-carrier coefficient
/// `lambda* = 18(R+1)/(R^4+R^3-R-6R^2 log R - 1) [ Phi - R omega/(R^2-1)(R^3/3 - R + 2/3) ]`.
pub fn lambda_star(ann: &Annulus, omega: f64, phi: f64) -> f64 {
    let r = ann.outer();
    let denom = r.powi(4) + r.powi(3) - r - 6.0 * r * r * r.ln() - 1.0;
    assert!(
        denom > 0.0,
        "flux-carrier denominator must be positive for R > 1 (R = {r})"
    );
    let tc_flux = r * omega / (r * r - 1.0) * (r.powi(3) / 3.0 - r + 2.0 / 3.0);
    18.0 * (r + 1.0) / denom * (phi - tc_flux)
}

/// Closed-form Dirichlet energy `K_R(omega, Phi) = ||grad V*||^2` of the flux
/// carrier with prescribed flux `Phi`.
pub fn dirichlet_energy_flux_carrier(ann: &Annulus, omega: f64, phi: f64) -> f64 {
    let r = ann.outer();
    let ls = lambda_star(ann, omega, phi);
    let lr = r.ln();
    let s = omega + 0.5 * r * ls * lr;
    let r2 = r * r;
    TAU * ((r2 + 1.0) / (r2 - 1.0) * s * s + ls * ls / 8.0 * (2.0 * r2 * lr * lr + r2 - 1.0)
        - ls * r * (r2 + 1.0) * lr / (r2 - 1.0) * s)
}

/// The four constants of the uniform-boundary annular Stokes solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StokesConstants {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
}

/// `C1..C4` as functions of `R`, with common denominator
/// `1 - R^2 + log R + R^2 log R` (positive for `R > 1`).
pub fn stokes_constants(ann: &Annulus) -> StokesConstants {
    let r = ann.outer();
    let d = 1.0 - r * r + r.ln() + r * r * r.ln();
    assert!(
        d > 0.0,
        "Stokes-constant denominator must be positive for R > 1 (R = {r})"
    );
    StokesConstants {
        c1: -1.0 / (2.0 * d),
        c2: r * r / (2.0 * d),
        c3: (1.0 - r * r) / (2.0 * d),
        c4: (r * r + 1.0) / d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solutions::catalog::{generalized_tc, special_forcing_tc, taylor_couette};
    use crate::solutions::RadialProfile;

    fn ann2() -> Annulus {
        Annulus::new(2.0).unwrap()
    }

    #[test]
    fn coefficient_with_zero_force() {
        let a = coefficient_A(&ann2(), 1.0, &Forcing::zero()).unwrap();
        assert!((a - 2.0 / 3.0).abs() < 1e-12);
        let a0 = coefficient_A(&Annulus::new(3.0).unwrap(), 0.0, &Forcing::zero()).unwrap();
        assert!(a0.abs() < 1e-15);
    }

    #[test]
    fn coefficient_with_inverse_rho_force() {
        // A = (2/3) log 2 - 1/4 for f_theta = 1/t, R = 2, omega = 0
        let forcing = Forcing::azimuthal(RadialProfile::inverse_rho(1.0));
        let a = coefficient_A(&ann2(), 0.0, &forcing).unwrap();
        let expect = 2.0 / 3.0 * 2.0f64.ln() - 0.25;
        assert!((a - expect).abs() < 1e-11, "{a} vs {expect}");
    }

    #[test]
    fn threshold_reduces_to_omega() {
        let k = threshold_force(&ann2(), 1.0, &Forcing::zero()).unwrap();
        assert!((k - 1.0).abs() < 1e-12);
    }

    #[test]
    fn threshold_scales_linearly_in_constant_force() {
        let k1 = threshold_force(
            &ann2(),
            0.0,
            &Forcing::azimuthal(RadialProfile::constant(1.0)),
        )
        .unwrap();
        let k3 = threshold_force(
            &ann2(),
            0.0,
            &Forcing::azimuthal(RadialProfile::constant(3.0)),
        )
        .unwrap();
        assert!((k3 - 3.0 * k1).abs() < 1e-10);
    }

    #[test]
    fn threshold_frozen_value() {
        // K_2(0, 1/rho) = sqrt(53)/(2 sqrt(15)) * sqrt(2 pi log 2)
        let forcing = Forcing::azimuthal(RadialProfile::inverse_rho(1.0));
        let k = threshold_force(&ann2(), 0.0, &forcing).unwrap();
        assert!((k - 1.961_394_595_571_315_4).abs() < 1e-10, "got {k}");
    }

    #[test]
    fn threshold_check_against_eigenvalue() {
        // omega = 1, f = 0, R = 2: uniqueness since 1 < sqrt(9.7533)
        let chk = threshold_check(&ann2(), 1.0, &Forcing::zero(), Some(9.7533)).unwrap();
        assert_eq!(chk.uniqueness_certified, Some(true));
        let chk = threshold_check(&ann2(), 4.0, &Forcing::zero(), Some(9.7533)).unwrap();
        assert_eq!(chk.uniqueness_certified, Some(false));
    }

    #[test]
    fn sup_bound_classical_tc() {
        let field = taylor_couette(&ann2(), 1.0);
        let chk = sup_velocity_bound_check(&field, 1.0);
        assert!(chk.pass);
        assert!((chk.max_velocity - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sup_bound_special_forcing() {
        let field = special_forcing_tc(&ann2(), 1.0, 1.0);
        let forcing = Forcing::azimuthal(RadialProfile::inverse_rho(1.0));
        let k = threshold_force(&ann2(), 1.0, &forcing).unwrap();
        let chk = sup_velocity_bound_check(&field, k);
        assert!(chk.pass, "max {} vs bound {}", chk.max_velocity, chk.bound);
    }

    #[test]
    fn sup_bound_generalized_with_tabulated_force() {
        let samples: Vec<(f64, f64)> = (0..=20)
            .map(|i| (1.0 + i as f64 * 0.05, (i as f64 * 0.4).sin()))
            .collect();
        let forcing = Forcing::azimuthal(RadialProfile::tabulated(samples).unwrap());
        let field = generalized_tc(&ann2(), 1.0, &forcing).unwrap();
        let k = threshold_force(&ann2(), 1.0, &forcing).unwrap();
        let chk = sup_velocity_bound_check(&field, k);
        assert!(chk.pass, "max {} vs bound {}", chk.max_velocity, chk.bound);
    }

    #[test]
    fn zero_field_passes_any_nonnegative_bound() {
        let field = taylor_couette(&ann2(), 0.0);
        let chk = sup_velocity_bound_check(&field, 0.0);
        assert!(chk.pass);
        assert_eq!(chk.max_velocity, 0.0);
    }

    #[test]
    fn lambda_star_values() {
        // bracket vanishes at the classical flux
        let phi0 = 2.0 / 3.0 * (8.0 / 3.0 - 2.0 + 2.0 / 3.0);
        assert!(lambda_star(&ann2(), 1.0, phi0).abs() < 1e-14);
        assert!(lambda_star(&ann2(), 0.0, 0.0).abs() < 1e-15);
        // frozen from a 40-digit evaluation
        let ls = lambda_star(&ann2(), 1.0, 1.0);
        assert!((ls - 1.374_738_102_877_800_6).abs() < 1e-13, "got {ls}");
    }

    #[test]
    fn dirichlet_energy_special_case() {
        // lambda* = 0: K = 2 pi omega^2 (R^2+1)/(R^2-1) = 2 pi * 5/3
        let r = 2.0_f64;
        let phi0 = r / (r * r - 1.0) * (r.powi(3) / 3.0 - r + 2.0 / 3.0);
        let k = dirichlet_energy_flux_carrier(&ann2(), 1.0, phi0);
        assert!((k - TAU * 5.0 / 3.0).abs() < 1e-12, "got {k}");
        assert!(dirichlet_energy_flux_carrier(&ann2(), 0.0, 0.0).abs() < 1e-15);
    }

    #[test]
    fn stokes_constants_frozen_values() {
        let c = stokes_constants(&ann2());
        assert!((c.c1 - (-1.073_569)).abs() < 1e-5, "c1 {}", c.c1);
        assert!((c.c2 - 4.294_276).abs() < 1e-5);
        assert!((c.c3 - (-3.220_708)).abs() < 1e-5);
        assert!((c.c4 - 10.735_693).abs() < 1e-5);
    }

    #[test]
    fn stokes_constants_algebraic_identities() {
        for r in [1.5, 2.0, 5.0, 20.0] {
            let ann = Annulus::new(r).unwrap();
            let c = stokes_constants(&ann);
            assert!((c.c2 - (-(r * r) * c.c1)).abs() < 1e-12 * c.c2.abs().max(1.0));
            assert!((c.c3 - (r * r - 1.0) * c.c1).abs() < 1e-12 * c.c3.abs().max(1.0));
            assert!((c.c4 - (-2.0 * (r * r + 1.0) * c.c1)).abs() < 1e-12 * c.c4.abs().max(1.0));
        }
    }

    #[test]
    fn stokes_constants_vanish_at_infinity() {
        // C1, C2 decay like 1/R^2; C3, C4 only like 1/log R
        let mut prev = f64::INFINITY;
        for r in [1e2, 1e4, 1e6] {
            let c = stokes_constants(&Annulus::new(r).unwrap());
            let m = c.c1.abs().max(c.c2.abs()).max(c.c3.abs()).max(c.c4.abs());
            assert!(m < prev, "magnitudes must decrease along the ladder");
            prev = m;
        }
        let c = stokes_constants(&Annulus::new(1e6).unwrap());
        assert!(c.c1.abs() < 1e-12 && c.c2.abs() < 1e-1);
        assert!(c.c3.abs() < 1e-1 && c.c4.abs() < 1e-1);
    }
}
