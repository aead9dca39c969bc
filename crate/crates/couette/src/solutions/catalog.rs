//! Constructors for every explicit solution in the catalog.

use super::coeffs::lambda_star;
use super::field::{FieldBuilder, FieldParams, FlowDomain, PolarPoint, SolutionKind};
use super::profile::{Forcing, RadialProfile};
use super::Annulus;
use crate::numerics::CumulativeProfile;
use crate::{Error, Result};
use std::f64::consts::TAU;
use std::sync::Arc;

/// Cells of the cached cumulative-integral grid used by quadrature-backed
/// velocity and pressure evaluators (2001 stored nodes).
const CACHE_CELLS: usize = 2000;

/// The classical Taylor-Couette flow: inner circle at rest, outer circle
/// rotating with angular speed `omega`.
///
/// `v0 = R omega/(R^2-1) (rho - 1/rho) theta_hat`,
/// `q0 = (R omega/(R^2-1))^2 (rho^2 - 1/rho^2 - 4 log rho)/2`.
pub fn taylor_couette(ann: &Annulus, omega: f64) -> super::FlowField {
    let r = ann.outer();
    let c = r * omega / (r * r - 1.0);
    let profile = RadialProfile::analytic_with_derivative(
        "taylor-couette",
        move |rho| c * (rho - 1.0 / rho),
        move |rho| c * (1.0 + 1.0 / (rho * rho)),
    );
    let pressure =
        move |rho: f64, _theta: f64| 0.5 * c * c * (rho * rho - 1.0 / (rho * rho) - 4.0 * rho.ln());
    FieldBuilder::rotational(
        SolutionKind::TaylorCouette,
        FlowDomain::Annulus { r_outer: r },
        profile,
        pressure,
    )
    .params(FieldParams {
        omega: Some(omega),
        ..Default::default()
    })
    .build()
}

/// The generalized Taylor-Couette flow driven by a rotationally invariant
/// force. Velocity and pressure are assembled from cached cumulative
/// integrals of the forcing profiles.
pub fn generalized_tc(ann: &Annulus, omega: f64, forcing: &Forcing) -> Result<super::FlowField> {
    let r = ann.outer();
    let f_theta = forcing.f_theta.clone();
    let f_rho = forcing.f_rho.clone();

    // I1(rho) = int_1^rho f_theta, I2(rho) = int_1^rho t^2 f_theta
    let i1 = Arc::new(CumulativeProfile::build(
        |t| f_theta.eval(t),
        1.0,
        r,
        CACHE_CELLS,
    ));
    let i2 = Arc::new(CumulativeProfile::build(
        |t| t * t * f_theta.eval(t),
        1.0,
        r,
        CACHE_CELLS,
    ));
    let a = r / (r * r - 1.0) * (omega + 0.5 * r * i1.total() - 0.5 / r * i2.total());
    if !a.is_finite() {
        return Err(Error::InvalidArgument(
            "forcing produced a non-finite azimuthal coefficient".to_string(),
        ));
    }

    let (g1, g2) = (i1.clone(), i2.clone());
    let velocity =
        move |rho: f64| a * (rho - 1.0 / rho) - 0.5 * rho * g1.eval(rho) + 0.5 / rho * g2.eval(rho);
    let velocity_for_pressure = velocity.clone();
    let profile = RadialProfile::analytic("generalized-tc", velocity);

    // q*(rho) = int_1^rho G(t)^2/t dt + int_1^rho f_rho(t) dt
    let swirl_head = CumulativeProfile::build(
        move |t| {
            let g = velocity_for_pressure(t);
            g * g / t
        },
        1.0,
        r,
        CACHE_CELLS,
    );
    let radial_head = CumulativeProfile::build(|t| f_rho.eval(t), 1.0, r, CACHE_CELLS);
    let pressure = move |rho: f64, _theta: f64| swirl_head.eval(rho) + radial_head.eval(rho);

    Ok(FieldBuilder::rotational(
        SolutionKind::GeneralizedTc,
        FlowDomain::Annulus { r_outer: r },
        profile,
        pressure,
    )
    .params(FieldParams {
        omega: Some(omega),
        forcing_label: Some(format!(
            "f_rho = {}, f_theta = {}",
            forcing.f_rho.label(),
            forcing.f_theta.label()
        )),
        ..Default::default()
    })
    .build())
}

/// Azimuthal profile shared by the special-forcing flow, the incomplete
/// family and the flux carrier:
/// `G(rho) = R/(R^2-1) (omega + lambda R log(R)/2)(rho - 1/rho) - lambda rho log(rho)/2`.
fn swirl_profile(r: f64, omega: f64, lambda: f64, label: &'static str) -> RadialProfile {
    let b = r / (r * r - 1.0) * (omega + 0.5 * lambda * r * r.ln());
    RadialProfile::analytic_with_derivative(
        label,
        move |rho| b * (rho - 1.0 / rho) - 0.5 * lambda * rho * rho.ln(),
        move |rho| b * (1.0 + 1.0 / (rho * rho)) - 0.5 * lambda * (rho.ln() + 1.0),
    )
}

/// Pressure head `int_1^rho G(t)^2 / t dt` cached on the evaluation grid.
fn swirl_pressure_head(r: f64, profile: &RadialProfile) -> CumulativeProfile {
    let g = profile.clone();
    CumulativeProfile::build(
        move |t| {
            let v = g.eval(t);
            v * v / t
        },
        1.0,
        r,
        CACHE_CELLS,
    )
}

/// The generalized Taylor-Couette flow for the special forcing
/// `f = (lambda/rho) theta_hat`, in closed form (no quadrature in the velocity).
pub fn special_forcing_tc(ann: &Annulus, omega: f64, lambda: f64) -> super::FlowField {
    let r = ann.outer();
    let profile = swirl_profile(r, omega, lambda, "special-forcing-tc");
    let head = swirl_pressure_head(r, &profile);
    FieldBuilder::rotational(
        SolutionKind::SpecialForcingTc,
        FlowDomain::Annulus { r_outer: r },
        profile,
        move |rho, _| head.eval(rho),
    )
    .params(FieldParams {
        omega: Some(omega),
        lambda: Some(lambda),
        ..Default::default()
    })
    .build()
}

/// The family of incomplete solutions of the unforced system: the velocity of
/// [`special_forcing_tc`] paired with the pressure `q - lambda theta`, which
/// is discontinuous across the cut for `lambda != 0`. Carries the analytic
/// pressure gradient `(G^2/rho, -lambda/rho)`.
pub fn incomplete_family(ann: &Annulus, omega: f64, lambda: f64) -> super::FlowField {
    let r = ann.outer();
    let profile = swirl_profile(r, omega, lambda, "incomplete");
    let head = swirl_pressure_head(r, &profile);
    let params = FieldParams {
        omega: Some(omega),
        lambda: Some(lambda),
        ..Default::default()
    };
    let pressure = move |rho: f64, theta: f64| head.eval(rho) - lambda * theta;
    let builder = FieldBuilder::rotational(
        SolutionKind::Incomplete,
        FlowDomain::Annulus { r_outer: r },
        profile.clone(),
        pressure,
    )
    .params(params);
    if lambda == 0.0 {
        builder.build()
    } else {
        let g = profile;
        builder
            .multivalued(move |rho, _theta| {
                let v = g.eval(rho);
                (v * v / rho, -lambda / rho)
            })
            .build()
    }
}

/// The flux carrier: the unique rotationally invariant incomplete solution of
/// the unforced Stokes system with transversal flux `phi`. The pressure is
/// `-lambda_star theta` with analytic gradient `(0, -lambda_star/rho)`.
pub fn flux_carrier(ann: &Annulus, omega: f64, phi: f64) -> super::FlowField {
    let r = ann.outer();
    let ls = lambda_star(ann, omega, phi);
    let profile = swirl_profile(r, omega, ls, "flux-carrier");
    let params = FieldParams {
        omega: Some(omega),
        phi: Some(phi),
        lambda: Some(ls),
        ..Default::default()
    };
    let pressure = move |_rho: f64, theta: f64| -ls * theta;
    let builder = FieldBuilder::rotational(
        SolutionKind::FluxCarrier,
        FlowDomain::Annulus { r_outer: r },
        profile,
        pressure,
    )
    .params(params);
    if ls == 0.0 {
        builder.build()
    } else {
        builder
            .multivalued(move |rho, _theta| (0.0, -ls / rho))
            .build()
    }
}

/// Unique Stokes solution with uniform boundary data `(1, 0)` on the outer
/// circle and no-slip inside.
pub fn stokes_annulus_uniform(ann: &Annulus) -> super::FlowField {
    stokes_uniform_scaled_by(ann, 1.0, SolutionKind::StokesUniform)
}

/// The `log(R)`-multiple of [`stokes_annulus_uniform`], the Stokes solution
/// with boundary data `(log R, 0)`.
pub fn stokes_annulus_scaled(ann: &Annulus) -> super::FlowField {
    stokes_uniform_scaled_by(ann, ann.outer().ln(), SolutionKind::StokesScaled)
}

fn stokes_uniform_scaled_by(ann: &Annulus, scale: f64, kind: SolutionKind) -> super::FlowField {
    let r = ann.outer();
    let c = super::coeffs::stokes_constants(ann);
    let (c1, c2, c3, c4) = (c.c1, c.c2, c.c3, c.c4);
    let velocity = move |rho: f64, theta: f64| {
        let lr = rho.ln();
        let u_rho = scale * (c1 * rho * rho + c2 / (rho * rho) + c3 + c4 * lr) * theta.cos();
        let u_theta =
            -scale * (3.0 * c1 * rho * rho - c2 / (rho * rho) + c3 + c4 * (1.0 + lr)) * theta.sin();
        (u_rho, u_theta)
    };
    let pressure =
        move |rho: f64, theta: f64| scale * (8.0 * c1 * rho - 2.0 * c4 / rho) * theta.cos();
    FieldBuilder::new(kind, FlowDomain::Annulus { r_outer: r }, velocity, pressure)
        .params(FieldParams {
            k: Some(scale),
            ..Default::default()
        })
        .build()
}

/// Boundary magnitude for the rotating annular Stokes problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotatingScale {
    /// Unit tangential speed on the outer circle.
    Unit,
    /// Tangential speed `R` on the outer circle (the invading-domains scaling).
    OuterRadius,
}

/// Unique Stokes solution with tangential boundary data on the outer circle:
/// `V = c (rho - 1/rho) theta_hat` with zero pressure, where `c = R/(R^2-1)`
/// for unit data and `c = R^2/(R^2-1)` for data of magnitude `R`.
pub fn stokes_annulus_rotating(ann: &Annulus, scale: RotatingScale) -> super::FlowField {
    let r = ann.outer();
    let c = match scale {
        RotatingScale::Unit => r / (r * r - 1.0),
        RotatingScale::OuterRadius => r * r / (r * r - 1.0),
    };
    let profile = RadialProfile::analytic_with_derivative(
        "stokes-rotating",
        move |rho| c * (rho - 1.0 / rho),
        move |rho| c * (1.0 + 1.0 / (rho * rho)),
    );
    FieldBuilder::rotational(
        SolutionKind::StokesRotating,
        FlowDomain::Annulus { r_outer: r },
        profile,
        |_, _| 0.0,
    )
    .params(FieldParams {
        k: Some(c),
        ..Default::default()
    })
    .build()
}

/// Members of the exterior catalog on `rho >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExteriorKind {
    /// The logarithmically growing exterior Stokes solution with no-slip on
    /// the unit circle.
    LogSolution,
    /// The rotationally invariant Navier-Stokes family
    /// `K (rho - 1/rho) theta_hat` with its exact pressure.
    RigidFamily { k: f64 },
    /// `(rho - 1/rho) theta_hat` with zero pressure (linear growth).
    Linear,
    /// `(rho/2) log(rho) theta_hat` with multivalued pressure `theta`.
    LogFlux,
}

/// Exterior-domain solutions connected with the Stokes paradox.
pub fn exterior_catalog(kind: ExteriorKind) -> super::FlowField {
    match kind {
        ExteriorKind::LogSolution => {
            let velocity = |rho: f64, theta: f64| {
                let lr = rho.ln();
                let a = 0.5 / (rho * rho) - 0.5;
                ((a + lr) * theta.cos(), (a - lr) * theta.sin())
            };
            let pressure = |rho: f64, theta: f64| -2.0 * theta.cos() / rho;
            FieldBuilder::new(
                SolutionKind::ExteriorLog,
                FlowDomain::Exterior,
                velocity,
                pressure,
            )
            .build()
        }
        ExteriorKind::RigidFamily { k } => {
            let profile = RadialProfile::analytic_with_derivative(
                "exterior-rigid",
                move |rho| k * (rho - 1.0 / rho),
                move |rho| k * (1.0 + 1.0 / (rho * rho)),
            );
            let pressure = move |rho: f64, _theta: f64| {
                0.5 * k * k * (rho * rho - 1.0 / (rho * rho) - 4.0 * rho.ln())
            };
            FieldBuilder::rotational(
                SolutionKind::ExteriorRigid,
                FlowDomain::Exterior,
                profile,
                pressure,
            )
            .params(FieldParams {
                k: Some(k),
                ..Default::default()
            })
            .build()
        }
        ExteriorKind::Linear => {
            let profile = RadialProfile::analytic_with_derivative(
                "exterior-linear",
                |rho| rho - 1.0 / rho,
                |rho| 1.0 + 1.0 / (rho * rho),
            );
            FieldBuilder::rotational(
                SolutionKind::ExteriorLinear,
                FlowDomain::Exterior,
                profile,
                |_, _| 0.0,
            )
            .build()
        }
        ExteriorKind::LogFlux => {
            let profile = RadialProfile::analytic_with_derivative(
                "exterior-logflux",
                |rho| 0.5 * rho * rho.ln(),
                |rho| 0.5 * (rho.ln() + 1.0),
            );
            FieldBuilder::rotational(
                SolutionKind::ExteriorLogFlux,
                FlowDomain::Exterior,
                profile,
                |_rho, theta| theta,
            )
            .multivalued(|rho, _theta| (0.0, 1.0 / rho))
            .build()
        }
    }
}

/// The disk Couette flow in `B_R`: `u = omega rho / R theta_hat`,
/// `p = (omega rho / R)^2 / 2`.
pub fn disk_couette(radius: f64, omega: f64) -> Result<super::FlowField> {
    if !radius.is_finite() || radius <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "disk radius must be positive, got {radius}"
        )));
    }
    let c = omega / radius;
    let profile =
        RadialProfile::analytic_with_derivative("disk-couette", move |rho| c * rho, move |_rho| c);
    Ok(FieldBuilder::rotational(
        SolutionKind::DiskCouette,
        FlowDomain::Disk { radius },
        profile,
        move |rho, _| 0.5 * (c * rho) * (c * rho),
    )
    .params(FieldParams {
        omega: Some(omega),
        ..Default::default()
    })
    .build())
}

/// The cut potential `q_bar = theta / (2 pi)`: harmonic off the cut, zero
/// normal derivative on both circles, unit jump across the cut. Evaluation on
/// the cut itself (theta = 0, i.e. the positive x-axis) is ambiguous.
pub fn cut_potential(point: PolarPoint) -> Result<f64> {
    let (x, y) = point.cartesian();
    if point.theta == 0.0 {
        return Err(Error::CutAmbiguity { rho: point.rho });
    }
    // branch of the polar angle continuous on the cut plane:
    // arctan(y/x) (+ 1/2 for x < 0, + 1 for x > 0, y < 0), scaled by 1/(2 pi),
    // extended by continuity onto the axis x = 0.
    let value = if x == 0.0 {
        if y > 0.0 {
            0.25
        } else {
            0.75
        }
    } else {
        let base = (y / x).atan() / TAU;
        if x < 0.0 {
            base + 0.5
        } else if y < 0.0 {
            base + 1.0
        } else {
            base
        }
    };
    Ok(value)
}

/// Gradient of the cut potential, `theta_hat / (2 pi rho)`, single-valued on
/// the whole annulus.
pub fn cut_potential_gradient(point: PolarPoint) -> (f64, f64) {
    (0.0, 1.0 / (TAU * point.rho))
}

/// The cut potential packaged as a zero-velocity field so it can run through
/// the jump and circulation audits.
pub fn cut_potential_field(ann: &Annulus) -> super::FlowField {
    let r = ann.outer();
    FieldBuilder::new(
        SolutionKind::CutPotential,
        FlowDomain::Annulus { r_outer: r },
        |_, _| (0.0, 0.0),
        |_rho, theta| theta / TAU,
    )
    .multivalued(|rho, _theta| (0.0, 1.0 / (TAU * rho)))
    .build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solutions::{evaluate, FluxDefinition};
    use std::f64::consts::PI;

    fn ann2() -> Annulus {
        Annulus::new(2.0).unwrap()
    }

    #[test]
    fn taylor_couette_boundary_and_interior() {
        let field = taylor_couette(&ann2(), 1.0);
        let (ur, ut) = field.velocity(2.0, 0.3).unwrap();
        assert!(ur.abs() < 1e-15 && (ut - 1.0).abs() < 1e-14);
        let (ur, ut) = field.velocity(1.0, 4.0).unwrap();
        assert!(ur.abs() < 1e-15 && ut.abs() < 1e-15);
        let (_, ut) = field.velocity(1.5, 0.0).unwrap();
        assert!((ut - 5.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn generalized_tc_with_zero_force_is_classical() {
        let ann = ann2();
        let gtc = generalized_tc(&ann, 1.0, &Forcing::zero()).unwrap();
        let tc = taylor_couette(&ann, 1.0);
        for i in 0..=100 {
            let rho = 1.0 + i as f64 / 100.0;
            let a = gtc.velocity(rho, 0.0).unwrap().1;
            let b = tc.velocity(rho, 0.0).unwrap().1;
            assert!((a - b).abs() <= 1e-12, "rho {rho}: {a} vs {b}");
        }
    }

    #[test]
    fn generalized_tc_matches_special_forcing_closed_form() {
        let ann = ann2();
        let forcing = Forcing::azimuthal(RadialProfile::inverse_rho(1.0));
        let gtc = generalized_tc(&ann, 1.0, &forcing).unwrap();
        let closed = special_forcing_tc(&ann, 1.0, 1.0);
        for i in 0..=200 {
            let rho = 1.0 + i as f64 / 200.0;
            let a = gtc.velocity(rho, 0.0).unwrap().1;
            let b = closed.velocity(rho, 0.0).unwrap().1;
            assert!((a - b).abs() <= 1e-8, "rho {rho}: {a} vs {b}");
        }
    }

    #[test]
    fn generalized_tc_radial_force_shifts_pressure_only() {
        let ann = ann2();
        let forcing = Forcing::radial(RadialProfile::constant(3.0));
        let gtc = generalized_tc(&ann, 1.0, &forcing).unwrap();
        let tc = taylor_couette(&ann, 1.0);
        for rho in [1.2, 1.6, 2.0] {
            let a = gtc.velocity(rho, 0.0).unwrap().1;
            let b = tc.velocity(rho, 0.0).unwrap().1;
            assert!((a - b).abs() <= 1e-12);
            let dp = gtc.pressure(rho, 0.0).unwrap() - tc.pressure(rho, 0.0).unwrap();
            // int_1^rho 3 dt = 3 (rho - 1)
            assert!(
                (dp - 3.0 * (rho - 1.0)).abs() < 1e-9,
                "rho {rho}: dp = {dp}"
            );
        }
    }

    #[test]
    fn generalized_tc_with_tabulated_constant_forcing() {
        // f_theta = 1 tabulated on a coarse grid reproduces the closed-form
        // value v(1.5) = 73/108 for R = 2, omega = 1.
        let ann = ann2();
        let samples: Vec<(f64, f64)> = (0..=10).map(|i| (1.0 + i as f64 * 0.1, 1.0)).collect();
        let forcing = Forcing::azimuthal(RadialProfile::tabulated(samples).unwrap());
        let gtc = generalized_tc(&ann, 1.0, &forcing).unwrap();
        let v = gtc.velocity(1.5, 0.0).unwrap().1;
        assert!((v - 73.0 / 108.0).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn special_forcing_point_value() {
        // frozen from a 40-digit evaluation of the closed form
        let field = special_forcing_tc(&ann2(), 0.0, 1.0);
        let v = field.velocity(2.0f64.sqrt(), 0.0).unwrap().1;
        assert!((v - 0.081_688_178_622_378_93).abs() < 1e-14, "got {v}");
    }

    #[test]
    fn special_forcing_with_zero_lambda_is_classical() {
        let a = special_forcing_tc(&ann2(), 1.0, 0.0);
        let b = taylor_couette(&ann2(), 1.0);
        for rho in [1.0, 1.3, 1.7, 2.0] {
            let va = a.velocity(rho, 1.0).unwrap().1;
            let vb = b.velocity(rho, 1.0).unwrap().1;
            assert!((va - vb).abs() < 1e-14);
        }
    }

    #[test]
    fn incomplete_family_pressure_jump_and_gradient() {
        let field = incomplete_family(&ann2(), 0.0, 1.0);
        assert!(field.multivalued_pressure());
        let eps = 1e-9;
        let jump = field.pressure(1.5, TAU - eps).unwrap() - field.pressure(1.5, eps).unwrap();
        assert!((jump - (-TAU)).abs() < 1e-7, "jump {jump}");
        let (gp_r, gp_t) = field.pressure_gradient(1.5, 1.0).unwrap();
        let g = field.velocity(1.5, 0.0).unwrap().1;
        assert!((gp_r - g * g / 1.5).abs() < 1e-13);
        assert!((gp_t - (-1.0 / 1.5)).abs() < 1e-15);
    }

    #[test]
    fn incomplete_family_zero_lambda_single_valued() {
        let field = incomplete_family(&ann2(), 1.0, 0.0);
        assert!(!field.multivalued_pressure());
        let tc = taylor_couette(&ann2(), 1.0);
        for rho in [1.1, 1.5, 1.9] {
            let a = field.velocity(rho, 0.0).unwrap().1;
            let b = tc.velocity(rho, 0.0).unwrap().1;
            assert!((a - b).abs() < 1e-13);
            // pressures agree up to quadrature error (both vanish at rho = 1)
            let pa = field.pressure(rho, 0.0).unwrap();
            let pb = tc.pressure(rho, 0.0).unwrap();
            assert!((pa - pb).abs() < 1e-11, "rho {rho}: {pa} vs {pb}");
        }
    }

    #[test]
    fn incomplete_omega_zero_closed_form() {
        // omega = 0: v = lambda [ R^2 log R/(2(R^2-1)) (rho - 1/rho) - rho log(rho)/2 ]
        let lambda = 1.0;
        let field = incomplete_family(&ann2(), 0.0, lambda);
        let r: f64 = 2.0;
        for rho in [1.2f64, 1.5, 1.9] {
            let expect = lambda
                * (r * r * r.ln() / (2.0 * (r * r - 1.0)) * (rho - 1.0 / rho)
                    - 0.5 * rho * rho.ln());
            let v = field.velocity(rho, 0.0).unwrap().1;
            assert!((v - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn flux_carrier_carries_prescribed_flux() {
        let field = flux_carrier(&ann2(), 1.0, 1.0);
        let f = crate::solutions::flux(&field, FluxDefinition::Weighted).unwrap();
        assert!((f - 1.0).abs() <= 1e-9, "flux {f}");
    }

    #[test]
    fn flux_carrier_zero_lambda_star_is_classical() {
        // Phi equal to the classical weighted flux makes lambda* vanish;
        // evaluated with the same floating expression as the implementation
        // so the cancellation is exact.
        let r = 2.0_f64;
        let phi0 = r * 1.0 / (r * r - 1.0) * (r.powi(3) / 3.0 - r + 2.0 / 3.0);
        let field = flux_carrier(&ann2(), 1.0, phi0);
        assert!(!field.multivalued_pressure());
        assert!(field.params().lambda.unwrap().abs() < 1e-14);
        let tc = taylor_couette(&ann2(), 1.0);
        for rho in [1.2, 1.7] {
            let a = field.velocity(rho, 0.0).unwrap().1;
            let b = tc.velocity(rho, 0.0).unwrap().1;
            assert!((a - b).abs() < 1e-13);
        }
        // pressure constant (zero)
        assert!(field.pressure(1.5, 2.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn flux_carrier_at_rest() {
        let field = flux_carrier(&ann2(), 0.0, 0.0);
        for rho in [1.0, 1.5, 2.0] {
            let (ur, ut) = field.velocity(rho, 1.0).unwrap();
            assert!(ur.abs() < 1e-15 && ut.abs() < 1e-15);
        }
        assert!(field.pressure(1.5, 3.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn stokes_uniform_boundary_values() {
        let field = stokes_annulus_uniform(&ann2());
        for theta in [0.0, 0.7, 2.9, 5.1] {
            let s = evaluate(&field, &[PolarPoint::new(2.0, theta)]).unwrap();
            assert!((s[0].ux - 1.0).abs() < 1e-12, "ux {}", s[0].ux);
            assert!(s[0].uy.abs() < 1e-12);
            let s = evaluate(&field, &[PolarPoint::new(1.0, theta)]).unwrap();
            assert!(s[0].ux.abs() < 1e-12 && s[0].uy.abs() < 1e-12);
        }
    }

    #[test]
    fn stokes_scaled_is_log_multiple() {
        let r: f64 = 2.0;
        let uniform = stokes_annulus_uniform(&ann2());
        let scaled = stokes_annulus_scaled(&ann2());
        for &(rho, theta) in &[(1.2, 0.4), (1.8, 3.3)] {
            let a = uniform.velocity(rho, theta).unwrap();
            let b = scaled.velocity(rho, theta).unwrap();
            assert!((b.0 - r.ln() * a.0).abs() < 1e-13);
            assert!((b.1 - r.ln() * a.1).abs() < 1e-13);
        }
        let s = evaluate(&scaled, &[PolarPoint::new(2.0, 1.1)]).unwrap();
        assert!((s[0].ux - r.ln()).abs() < 1e-12);
    }

    #[test]
    fn stokes_rotating_boundary_values() {
        let unit = stokes_annulus_rotating(&ann2(), RotatingScale::Unit);
        assert!((unit.velocity(2.0, 0.0).unwrap().1 - 1.0).abs() < 1e-14);
        let big = stokes_annulus_rotating(&ann2(), RotatingScale::OuterRadius);
        assert!((big.velocity(2.0, 0.0).unwrap().1 - 2.0).abs() < 1e-14);
        assert!(unit.pressure(1.5, 0.2).unwrap() == 0.0);
    }

    #[test]
    fn rotating_outer_radius_tends_to_linear_exterior() {
        // at fixed rho, R^2/(R^2-1)(rho - 1/rho) -> rho - 1/rho as R grows
        let linear = exterior_catalog(ExteriorKind::Linear);
        let ann = Annulus::new(1e6).unwrap();
        let big = stokes_annulus_rotating(&ann, RotatingScale::OuterRadius);
        for rho in [1.5, 3.0, 10.0] {
            let a = big.velocity(rho, 0.0).unwrap().1;
            let b = linear.velocity(rho, 0.0).unwrap().1;
            assert!((a - b).abs() < 1e-10, "rho {rho}");
        }
    }

    #[test]
    fn exterior_log_solution_no_slip() {
        let field = exterior_catalog(ExteriorKind::LogSolution);
        for theta in [0.0, 1.0, 4.4] {
            let (ur, ut) = field.velocity(1.0, theta).unwrap();
            assert!(ur.abs() < 1e-15 && ut.abs() < 1e-15);
        }
    }

    #[test]
    fn exterior_rigid_family_values() {
        let field = exterior_catalog(ExteriorKind::RigidFamily { k: 1.0 });
        assert!((field.velocity(2.0, 0.0).unwrap().1 - 1.5).abs() < 1e-15);
        let q = field.pressure(2.0, 0.0).unwrap();
        let expect = 0.5 * (4.0 - 0.25 - 4.0 * 2.0f64.ln());
        assert!((q - expect).abs() < 1e-15);
    }

    #[test]
    fn exterior_logflux_growth_rate() {
        let field = exterior_catalog(ExteriorKind::LogFlux);
        let rho = 1e4_f64;
        let speed = field.velocity(rho, 0.0).unwrap().1.abs();
        assert!((speed / (rho * rho.ln()) - 0.5).abs() < 1e-12);
        assert!(field.multivalued_pressure());
    }

    #[test]
    fn disk_couette_values() {
        let field = disk_couette(2.0, 1.0).unwrap();
        assert!((field.velocity(2.0, 0.0).unwrap().1 - 1.0).abs() < 1e-15);
        let (ur, ut) = field.velocity(0.0, 0.0).unwrap();
        assert!(ur == 0.0 && ut == 0.0);
        assert!(field.pressure(0.0, 0.0).unwrap() == 0.0);
        assert!(disk_couette(0.0, 1.0).is_err());
    }

    #[test]
    fn cut_potential_branches() {
        let v = cut_potential(PolarPoint::new(1.5, PI)).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
        let v = cut_potential(PolarPoint::new(1.5, PI / 2.0)).unwrap();
        assert!((v - 0.25).abs() < 1e-12);
        let v = cut_potential(PolarPoint::new(1.5, 3.0 * PI / 2.0)).unwrap();
        assert!((v - 0.75).abs() < 1e-12);
        // continuous across theta = pi/2 and consistent with theta/2pi everywhere
        for theta in [0.1, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0] {
            let v = cut_potential(PolarPoint::new(2.0, theta)).unwrap();
            assert!((v - theta / TAU).abs() < 1e-13, "theta {theta}");
        }
        assert!(matches!(
            cut_potential(PolarPoint::new(1.5, 0.0)),
            Err(Error::CutAmbiguity { .. })
        ));
    }

    #[test]
    fn cut_potential_gradient_magnitude() {
        let g = cut_potential_gradient(PolarPoint::new(2.0, 1.0));
        assert!(g.0 == 0.0);
        assert!((g.1 - 1.0 / (4.0 * PI)).abs() < 1e-15);
    }
}
