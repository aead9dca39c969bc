//! Bounds for the Sobolev constant of the embedding `H_0^1 -> L^4` on the
//! annulus, the torsion function behind the upper bound, and the inequality
//! audit suite.

use super::eigen::{eigenfunction, eigenvalue};
use crate::numerics::bessel_j0_raw;
use crate::numerics::{find_root, integrate, scan_first_bracket, Interval};
use crate::solutions::{Annulus, RadialProfile};
use crate::{Error, Result};
use std::f64::consts::{PI, TAU};

/// Lower and upper bounds for the `L^4` Sobolev constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SobolevBounds {
    pub s4_lower: f64,
    pub s4_upper: f64,
    pub kappa1: f64,
    /// Set for R < 1.05 where the kappa1 sum loses most of its digits.
    pub cancellation_warning: bool,
}

/// First zero of J0, computed by scan plus bracketing solve (about 2.40483).
pub fn first_j0_zero() -> Result<f64> {
    let bracket = scan_first_bracket(bessel_j0_raw, 1e-3, 0.05, 10.0)?;
    find_root(bessel_j0_raw, bracket, 1e-12)
}

/// The denominator polynomial of the upper bound, evaluated with the powers
/// of `log R` grouped and each coefficient polynomial factored through
/// `(R^2 - 1)` to limit cancellation for R near 1.
pub fn kappa1(r: f64) -> f64 {
    let x = r * r;
    let l = r.ln();
    let m = x - 1.0;
    let p0 = 1080.0 * m.powi(5);
    let p1 = -2025.0 * m.powi(4) * (x + 1.0);
    let p2 = 1700.0 * m.powi(3) * (x * x + x + 1.0);
    let p3 = -750.0 * m.powi(2) * (((x + 1.0) * x + 1.0) * x + 1.0);
    let p4 = 144.0 * m * ((((x + 1.0) * x + 1.0) * x + 1.0) * x + 1.0);
    p0 + l * (p1 + l * (p2 + l * (p3 + l * p4)))
}

/// Computes the sandwich
/// `mu0 sqrt(3 pi / (2(R^2-1))) <= S4 <= 24 sqrt(5 pi) [(R^2+1) log R + 1 - R^2](R^2-1) log R / sqrt(kappa1)`.
pub fn s4_bounds(ann: &Annulus) -> Result<SobolevBounds> {
    let r = ann.outer();
    let mu0 = first_j0_zero()?;
    let s4_lower = mu0 * (3.0 * PI / (2.0 * (r * r - 1.0))).sqrt();
    let k1 = kappa1(r);
    if k1 <= 0.0 {
        return Err(Error::Inconsistency(format!(
            "kappa1(R = {r}) = {k1} is not positive; cancellation destroyed the value"
        )));
    }
    let l = r.ln();
    let s4_upper = 24.0 * (5.0 * PI).sqrt() * ((r * r + 1.0) * l + 1.0 - r * r) * (r * r - 1.0) * l
        / k1.sqrt();
    Ok(SobolevBounds {
        s4_lower,
        s4_upper,
        kappa1: k1,
        cancellation_warning: r < 1.05,
    })
}

/// Torsion function of the annulus and its `L^4` Rayleigh quotient.
#[derive(Debug, Clone)]
pub struct Torsion {
    pub profile: RadialProfile,
    /// `||grad X0||^2 / ||X0||^2_{L^4}` by weighted quadrature.
    pub rayleigh_l4: f64,
}

/// `X0(rho) = [(R^2-1) log(rho)/log(R) + 1 - rho^2]/4` solves the torsion
/// problem (`-Delta X0 = 1`, zero boundary data); its Rayleigh quotient is
/// the origin of the upper bound in [`s4_bounds`].
pub fn torsion_function(ann: &Annulus) -> Result<Torsion> {
    let r = ann.outer();
    let profile = torsion_profile(r);
    let grad_sq = weighted_grad_sq(&profile, r)?;
    let l4_sq = weighted_l4_norm_sq(&profile, r)?;
    Ok(Torsion {
        profile,
        rayleigh_l4: grad_sq / l4_sq,
    })
}

fn torsion_profile(r: f64) -> RadialProfile {
    let lr = r.ln();
    RadialProfile::analytic_with_derivative(
        "torsion",
        move |rho| 0.25 * ((r * r - 1.0) * rho.ln() / lr + 1.0 - rho * rho),
        move |rho| 0.25 * ((r * r - 1.0) / (lr * rho) - 2.0 * rho),
    )
}

fn profile_derivative(w: &RadialProfile, rho: f64) -> f64 {
    match w.deriv(rho) {
        Some(d) => d,
        None => {
            // 5-point central difference
            let h = 1e-5;
            (w.eval(rho - 2.0 * h) - 8.0 * w.eval(rho - h) + 8.0 * w.eval(rho + h)
                - w.eval(rho + 2.0 * h))
                / (12.0 * h)
        }
    }
}

/// Weighted quadrature `2 pi int_1^R f` with the tolerance scaled to a
/// coarse first estimate.
fn weighted_quad<F: Fn(f64) -> f64>(f: F, r: f64) -> Result<f64> {
    let iv = Interval::new(1.0, r)?;
    let rough = TAU * integrate(&f, iv, 1e-6).unwrap_or(1.0);
    let tol = (1e-12 * rough.abs()).max(1e-16);
    Ok(TAU * integrate(&f, iv, tol)?)
}

/// `||grad w||^2 = 2 pi int_1^R rho w'(rho)^2 drho`.
fn weighted_grad_sq(w: &RadialProfile, r: f64) -> Result<f64> {
    weighted_quad(
        |rho| {
            let d = profile_derivative(w, rho);
            rho * d * d
        },
        r,
    )
}

/// `||w||^2 = 2 pi int_1^R rho w^2 drho`.
fn weighted_l2_norm_sq(w: &RadialProfile, r: f64) -> Result<f64> {
    weighted_quad(
        |rho| {
            let v = w.eval(rho);
            rho * v * v
        },
        r,
    )
}

/// `||w||^2_{L^4} = sqrt(2 pi int_1^R rho w^4 drho)`.
fn weighted_l4_norm_sq(w: &RadialProfile, r: f64) -> Result<f64> {
    let quartic = weighted_quad(
        |rho| {
            let v = w.eval(rho);
            rho * v * v * v * v
        },
        r,
    )?;
    Ok(quartic.sqrt())
}

/// One audited inequality for one trial profile.
#[derive(Debug, Clone)]
pub struct InequalityRow {
    pub profile: String,
    pub inequality: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct InequalityReport {
    pub rows: Vec<InequalityRow>,
    pub all_pass: bool,
}

/// Default trial profiles: the parabola `(rho-1)(R-rho)`, three sine modes,
/// and the torsion function. All vanish on both circles.
pub fn default_trials(ann: &Annulus) -> Vec<RadialProfile> {
    let r = ann.outer();
    let mut trials = vec![RadialProfile::analytic_with_derivative(
        "parabola",
        move |rho| (rho - 1.0) * (r - rho),
        move |rho| r + 1.0 - 2.0 * rho,
    )];
    for k in 1..=3usize {
        let w = k as f64 * PI / (r - 1.0);
        let label: &'static str = match k {
            1 => "sine-1",
            2 => "sine-2",
            _ => "sine-3",
        };
        trials.push(RadialProfile::analytic_with_derivative(
            label,
            move |rho| (w * (rho - 1.0)).sin(),
            move |rho| w * (w * (rho - 1.0)).cos(),
        ));
    }
    trials.push(torsion_profile(r));
    trials
}

/// Audits the interpolation inequality `||w||_{L4}^2 <= sqrt(2/(3 pi)) ||grad w|| ||w||`,
/// the Faber-Krahn bound `||w|| <= sqrt(R^2-1)/mu0 ||grad w||` and the
/// Poincare inequality `||w|| <= ||grad w|| / sqrt(lambda)` for each trial
/// profile (all norms by weighted quadrature).
pub fn inequality_suite(ann: &Annulus, trials: &[RadialProfile]) -> Result<InequalityReport> {
    let r = ann.outer();
    let mu0 = first_j0_zero()?;
    let lambda = eigenvalue(ann)?.lambda;
    let mut rows = Vec::new();
    for w in trials {
        let grad = weighted_grad_sq(w, r)?.sqrt();
        let l2 = weighted_l2_norm_sq(w, r)?.sqrt();
        let l4_sq = weighted_l4_norm_sq(w, r)?;
        // a zero trial passes vacuously
        let slack = 1.0 + 1e-12;
        let interp_rhs = (2.0 / (3.0 * PI)).sqrt() * grad * l2;
        rows.push(InequalityRow {
            profile: w.label(),
            inequality: "interpolation-L4",
            lhs: l4_sq,
            rhs: interp_rhs,
            pass: l4_sq <= interp_rhs * slack + 1e-300,
        });
        let fk_rhs = (r * r - 1.0).sqrt() / mu0 * grad;
        rows.push(InequalityRow {
            profile: w.label(),
            inequality: "faber-krahn",
            lhs: l2,
            rhs: fk_rhs,
            pass: l2 <= fk_rhs * slack + 1e-300,
        });
        let poincare_rhs = grad / lambda.sqrt();
        rows.push(InequalityRow {
            profile: w.label(),
            inequality: "poincare",
            lhs: l2,
            rhs: poincare_rhs,
            pass: l2 <= poincare_rhs * slack + 1e-300,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(InequalityReport { rows, all_pass })
}

/// Relative slack of the Poincare inequality on the computed eigenfunction;
/// zero up to quadrature error since the eigenfunction is the minimizer.
pub fn poincare_equality_gap(ann: &Annulus) -> Result<f64> {
    let r = ann.outer();
    let lambda = eigenvalue(ann)?.lambda;
    let f = eigenfunction(ann)?;
    let grad = weighted_grad_sq(&f, r)?.sqrt();
    let l2 = weighted_l2_norm_sq(&f, r)?.sqrt();
    Ok((grad / lambda.sqrt() - l2).abs() / l2)
}

/// The comparison `s4_lower <= R0 (<= .. s4_upper reported alongside)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TobiasReport {
    pub s4_lower: f64,
    pub r0: f64,
    pub s4_upper: f64,
    pub pass: bool,
}

/// Checks the lower Sobolev bound against the radial Sobolev constant.
pub fn tobias_check(ann: &Annulus) -> Result<TobiasReport> {
    let bounds = s4_bounds(ann)?;
    let shoot = super::shooting::radial_sobolev(ann)?;
    Ok(TobiasReport {
        s4_lower: bounds.s4_lower,
        r0: shoot.r0,
        s4_upper: bounds.s4_upper,
        pass: bounds.s4_lower <= shoot.r0 * (1.0 + 1e-12),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu0_regression() {
        let mu0 = first_j0_zero().unwrap();
        assert!((mu0 - 2.40483).abs() < 1e-4, "mu0 {mu0}");
        assert!((mu0 - 2.404_825_557_695_773).abs() < 1e-10);
    }

    #[test]
    fn kappa1_frozen_values() {
        // frozen from a 30-digit evaluation of the factored form
        assert!((kappa1(1.5) - 2.449_250_958_650_627e-3).abs() < 1e-12);
        assert!((kappa1(2.0) - 13.214_622_852_106_827).abs() < 1e-9);
        assert!((kappa1(5.0) - 2.376_645_008_209_002e8).abs() < 1e2);
    }

    #[test]
    fn s4_lower_frozen_value() {
        let b = s4_bounds(&Annulus::new(2.0).unwrap()).unwrap();
        // mu0 sqrt(pi/2)
        assert!(
            (b.s4_lower - 3.014_001_869_237_744).abs() < 1e-9,
            "got {}",
            b.s4_lower
        );
        assert!((b.s4_lower - 3.01403).abs() < 5e-5);
    }

    #[test]
    fn s4_upper_frozen_value() {
        let b = s4_bounds(&Annulus::new(2.0).unwrap()).unwrap();
        assert!(
            (b.s4_upper - 25.341_378_048_178_74).abs() < 1e-8,
            "got {}",
            b.s4_upper
        );
    }

    #[test]
    fn bounds_ordered_across_radii() {
        for r in [1.1, 1.5, 2.0, 5.0, 10.0, 100.0] {
            let b = s4_bounds(&Annulus::new(r).unwrap()).unwrap();
            assert!(
                b.s4_lower <= b.s4_upper,
                "R = {r}: {} vs {}",
                b.s4_lower,
                b.s4_upper
            );
            assert!(b.s4_lower > 0.0);
        }
    }

    #[test]
    fn lower_bound_decays_with_radius() {
        let mut prev = f64::INFINITY;
        for r in [10.0, 100.0, 1000.0] {
            let b = s4_bounds(&Annulus::new(r).unwrap()).unwrap();
            assert!(b.s4_lower < prev);
            prev = b.s4_lower;
        }
    }

    #[test]
    fn cancellation_warning_near_one() {
        assert!(
            s4_bounds(&Annulus::new(1.04).unwrap())
                .unwrap()
                .cancellation_warning
        );
        assert!(
            !s4_bounds(&Annulus::new(1.5).unwrap())
                .unwrap()
                .cancellation_warning
        );
    }

    #[test]
    fn torsion_boundary_and_pde() {
        let ann = Annulus::new(3.0).unwrap();
        let t = torsion_function(&ann).unwrap();
        assert!(t.profile.eval(1.0).abs() < 1e-14);
        assert!(t.profile.eval(3.0).abs() < 1e-14);
        // -(X0'' + X0'/rho) = 1
        let h = 1e-5;
        for rho in [1.4, 2.0, 2.7] {
            let x = &t.profile;
            let fpp = (x.eval(rho + h) - 2.0 * x.eval(rho) + x.eval(rho - h)) / (h * h);
            let fp = (x.eval(rho + h) - x.eval(rho - h)) / (2.0 * h);
            let residual = -(fpp + fp / rho) - 1.0;
            assert!(residual.abs() < 1e-5, "rho {rho}: {residual}");
        }
    }

    #[test]
    fn torsion_rayleigh_equals_upper_bound() {
        for r in [1.5, 2.0, 5.0] {
            let ann = Annulus::new(r).unwrap();
            let t = torsion_function(&ann).unwrap();
            let b = s4_bounds(&ann).unwrap();
            let rel = (t.rayleigh_l4 - b.s4_upper).abs() / b.s4_upper;
            assert!(
                rel < 1e-6,
                "R = {r}: rayleigh {} vs upper {}",
                t.rayleigh_l4,
                b.s4_upper
            );
        }
    }

    #[test]
    fn rayleigh_quotient_scale_invariant() {
        let ann = Annulus::new(2.0).unwrap();
        let t = torsion_function(&ann).unwrap();
        let r = ann.outer();
        for scale in [0.1_f64, 3.0] {
            let base = torsion_profile(r);
            let base2 = base.clone();
            let scaled = RadialProfile::analytic_with_derivative(
                "scaled-torsion",
                move |rho| scale * base.eval(rho),
                move |rho| scale * base2.deriv(rho).unwrap(),
            );
            let q =
                weighted_grad_sq(&scaled, r).unwrap() / weighted_l4_norm_sq(&scaled, r).unwrap();
            assert!(
                (q - t.rayleigh_l4).abs() / t.rayleigh_l4 < 1e-9,
                "scale {scale}: {q} vs {}",
                t.rayleigh_l4
            );
        }
    }

    #[test]
    fn inequalities_hold_on_default_trials() {
        for r in [1.5, 2.0] {
            let ann = Annulus::new(r).unwrap();
            let report = inequality_suite(&ann, &default_trials(&ann)).unwrap();
            assert!(
                report.all_pass,
                "{:#?}",
                report.rows.iter().filter(|x| !x.pass).collect::<Vec<_>>()
            );
            assert_eq!(report.rows.len(), 15);
        }
    }

    #[test]
    fn zero_trial_passes_vacuously() {
        let ann = Annulus::new(2.0).unwrap();
        let report = inequality_suite(&ann, &[RadialProfile::zero()]).unwrap();
        assert!(report.all_pass);
    }

    #[test]
    fn poincare_is_equality_on_eigenfunction() {
        let gap = poincare_equality_gap(&Annulus::new(2.0).unwrap()).unwrap();
        assert!(gap < 1e-6, "gap {gap}");
    }
}
