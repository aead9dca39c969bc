//! Shooting method for the radial semilinear problem
//! `v'' + v'/rho + v^3 = 0`, `v(1) = 0`, `v(R) = 0`, and the radial Sobolev
//! constant evaluated on the shot trajectory.

use crate::numerics::{
    integrate_ode, Event, Interval, OdeOptions, OdeState, StepControl, StorePolicy,
};
use crate::solutions::Annulus;
use crate::{Error, Result};
use std::f64::consts::TAU;

/// Fixed integration step `(R-1)/ODE_STEPS`, chosen so the shooting tables
/// reproduce at well below the acceptance tolerance.
const ODE_STEPS: f64 = 20000.0;
/// Bisection target on the first-zero location.
const ZERO_TOL: f64 = 1e-8;
/// Geometric ladder for the initial-slope scan: `2^k * 1e-3`, k = 0..=30.
const LADDER_BASE: f64 = 1e-3;
const LADDER_STEPS: u32 = 30;

/// Result of the radial Sobolev computation.
#[derive(Debug, Clone)]
pub struct ShootResult {
    /// Initial slope with first zero at `rho = R`.
    pub a_star: f64,
    /// Radial Sobolev constant `sqrt(2 pi) int rho v'^2 / sqrt(int rho v^4)`.
    pub r0: f64,
    /// Sampled `(rho, v, v')` along the final trajectory.
    pub profile: Vec<(f64, f64, f64)>,
    /// Whether the slope scan confirmed monotone decrease of the first zero.
    pub monotone_scan: bool,
}

fn rhs(rho: f64, y: &[f64], dy: &mut [f64]) {
    dy[0] = y[1];
    dy[1] = -y[1] / rho - y[0] * y[0] * y[0];
}

fn shoot(ann: &Annulus, a: f64, store: StorePolicy) -> Result<crate::numerics::Trajectory> {
    let r = ann.outer();
    let span_hi = 4.0 * r;
    let init = OdeState::new(1.0, vec![0.0, a]);
    let span = Interval::new(1.0, span_hi)?;
    let opts = OdeOptions {
        control: StepControl::Fixed {
            h: (r - 1.0) / ODE_STEPS,
        },
        event: Some(Event { component: 0 }),
        store,
    };
    integrate_ode(rhs, &init, span, &opts)
}

/// Location of the first zero of the shot solution with initial slope `a`,
/// or `+inf` when the solution stays positive up to `4R`.
pub fn shoot_first_zero(ann: &Annulus, a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "initial slope must be positive, got {a}"
        )));
    }
    let tr = shoot(ann, a, StorePolicy::Endpoints)?;
    Ok(tr.event.map_or(f64::INFINITY, |e| e.rho))
}

/// Solves the two-point problem by bisection on the initial slope and
/// evaluates the radial Sobolev constant on the resulting trajectory by
/// trapezoid quadrature on the integrator's step grid.
pub fn radial_sobolev(ann: &Annulus) -> Result<ShootResult> {
    let r = ann.outer();

    // slope scan over the geometric ladder until the first zero drops below R
    let mut monotone = true;
    let mut prev_a = None;
    let mut prev_zero = f64::INFINITY;
    let mut bracket = None;
    for k in 0..=LADDER_STEPS {
        let a = LADDER_BASE * f64::powi(2.0, k as i32);
        let zero = shoot_first_zero(ann, a)?;
        if zero > prev_zero {
            monotone = false;
        }
        if zero < r {
            match prev_a {
                Some(lo) => bracket = Some((lo, a)),
                None => bracket = Some((a / 2.0, a)),
            }
            break;
        }
        prev_a = Some(a);
        prev_zero = zero;
    }
    let (mut lo, mut hi) = bracket.ok_or_else(|| Error::BracketNotFound {
        start: LADDER_BASE,
        max_x: LADDER_BASE * f64::powi(2.0, LADDER_STEPS as i32),
    })?;

    // bisection: first zero is decreasing in the slope
    let mut a_star = 0.5 * (lo + hi);
    let mut zero = shoot_first_zero(ann, a_star)?;
    let mut iterations = 0;
    while (zero - r).abs() > ZERO_TOL {
        if zero > r {
            lo = a_star;
        } else {
            hi = a_star;
        }
        a_star = 0.5 * (lo + hi);
        zero = shoot_first_zero(ann, a_star)?;
        iterations += 1;
        if iterations > 300 {
            return Err(Error::Inconsistency(format!(
                "slope bisection stalled at R = {r}: |zero - R| = {}",
                (zero - r).abs()
            )));
        }
    }

    // final pass stores the trajectory for the quadratures
    let tr = shoot(ann, a_star, StorePolicy::All)?;
    let steps = &tr.steps;
    let mut num = 0.0; // int rho v'^2
    let mut den = 0.0; // int rho v^4
    let mut profile = Vec::with_capacity(steps.len());
    let mut positive = true;
    for (i, st) in steps.iter().enumerate() {
        let (rho, v, vp) = (st.rho, st.y[0], st.y[1]);
        profile.push((rho, v, vp));
        if i + 1 < steps.len() && i > 0 && v <= 0.0 {
            positive = false;
        }
        if i + 1 < steps.len() {
            let nx = &steps[i + 1];
            let h = nx.rho - rho;
            let f0 = rho * vp * vp;
            let f1 = nx.rho * nx.y[1] * nx.y[1];
            num += 0.5 * h * (f0 + f1);
            let g0 = rho * v.powi(4);
            let g1 = nx.rho * nx.y[0].powi(4);
            den += 0.5 * h * (g0 + g1);
        }
    }
    if !positive {
        return Err(Error::Inconsistency(
            "shot profile is not positive inside the annulus".to_string(),
        ));
    }
    let r0 = TAU.sqrt() * num / den.sqrt();
    Ok(ShootResult {
        a_star,
        r0,
        profile,
        monotone_scan: monotone,
    })
}
