//! Classical fourth-order Runge-Kutta integration with cubic-Hermite dense
//! output and first-zero-crossing event detection.

use super::Interval;
use crate::{Error, Result};

/// State of the radial ODE system at one coordinate value.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeState {
    /// Independent (radial) coordinate.
    pub rho: f64,
    /// Solution components.
    pub y: Vec<f64>,
    /// Derivative components (right-hand side at `rho`).
    pub dy: Vec<f64>,
}

impl OdeState {
    pub fn new(rho: f64, y: Vec<f64>) -> Self {
        let dy = vec![0.0; y.len()];
        OdeState { rho, y, dy }
    }
}

/// Step-size policy.
#[derive(Debug, Clone, Copy)]
pub enum StepControl {
    /// Fixed step `h`; each step also takes two half steps and keeps the
    /// Richardson-corrected value, reporting the accumulated error estimate.
    Fixed { h: f64 },
    /// Error-per-step control by step doubling around the target `tol`.
    Adaptive { tol: f64, h_init: f64 },
}

/// Which intermediate states to keep in the returned trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StorePolicy {
    All,
    /// Keep only the initial and final (or event) states.
    Endpoints,
}

/// Detect the first sign change of solution component `component`.
#[derive(Debug, Clone, Copy)]
pub struct Event {
    pub component: usize,
}

#[derive(Debug, Clone)]
pub struct OdeOptions {
    pub control: StepControl,
    pub event: Option<Event>,
    pub store: StorePolicy,
}

impl Default for OdeOptions {
    fn default() -> Self {
        OdeOptions {
            control: StepControl::Fixed { h: 1e-3 },
            event: None,
            store: StorePolicy::All,
        }
    }
}

/// Location of a detected zero crossing.
#[derive(Debug, Clone)]
pub struct EventHit {
    /// Coordinate of the crossing, refined to `bracket_width`.
    pub rho: f64,
    /// Interpolated state at the crossing.
    pub y: Vec<f64>,
    /// Width of the final refinement bracket (at most 1e-10).
    pub bracket_width: f64,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub steps: Vec<OdeState>,
    pub event: Option<EventHit>,
    /// Largest per-step Richardson error estimate seen (fixed control only).
    pub max_step_error: f64,
    dense: bool,
}

impl Trajectory {
    pub fn last(&self) -> &OdeState {
        self.steps
            .last()
            .expect("trajectory has at least the initial state")
    }

    /// Dense output: cubic Hermite interpolation between the stored steps.
    /// `None` outside the stored range or when intermediate steps were not
    /// kept ([`StorePolicy::Endpoints`]).
    pub fn sample(&self, rho: f64) -> Option<Vec<f64>> {
        let steps = &self.steps;
        if !self.dense || steps.len() < 2 || rho < steps[0].rho || rho > steps[steps.len() - 1].rho
        {
            return None;
        }
        let mut lo = 0;
        let mut hi = steps.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if steps[mid].rho <= rho {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let (a, b) = (&steps[lo], &steps[hi]);
        Some(hermite(a.rho, b.rho, &a.y, &a.dy, &b.y, &b.dy, rho))
    }
}

const EVENT_BRACKET_WIDTH: f64 = 1e-10;

/// Integrates `rhs` from `init` over `span` (requires `span.lo == init.rho`).
///
/// The right-hand side writes the derivative of `y` into its third argument.
/// With an event attached, integration stops at the first sign change of the
/// chosen component, refined on the dense output to a bracket of width 1e-10.
pub fn integrate_ode<F>(
    rhs: F,
    init: &OdeState,
    span: Interval,
    opts: &OdeOptions,
) -> Result<Trajectory>
where
    F: Fn(f64, &[f64], &mut [f64]),
{
    if (init.rho - span.lo()).abs() > 1e-12 * span.width().max(1.0) {
        return Err(Error::InvalidArgument(format!(
            "span must start at the initial state: span.lo = {}, init.rho = {}",
            span.lo(),
            init.rho
        )));
    }
    let dim = init.y.len();
    if dim == 0 {
        return Err(Error::InvalidArgument("empty ODE state".to_string()));
    }
    if let Some(ev) = opts.event {
        if ev.component >= dim {
            return Err(Error::InvalidArgument(format!(
                "event component {} out of range for dimension {dim}",
                ev.component
            )));
        }
    }

    let mut k = vec![0.0; dim];
    let mut y = init.y.clone();
    let mut dy = vec![0.0; dim];
    rhs(init.rho, &y, &mut dy);
    let mut rho = span.lo();

    let mut steps = Vec::new();
    steps.push(OdeState {
        rho,
        y: y.clone(),
        dy: dy.clone(),
    });

    let mut max_err = 0.0_f64;
    let mut h = match opts.control {
        StepControl::Fixed { h } => h,
        StepControl::Adaptive { h_init, .. } => h_init,
    };
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "step size must be positive, got {h}"
        )));
    }

    let mut scratch = StepScratch::new(dim);
    let mut event: Option<EventHit> = None;

    while rho < span.hi() {
        let h_step = h.min(span.hi() - rho);
        if h_step < f64::EPSILON * span.width() {
            return Err(Error::IntegrationFailure {
                rho,
                message: "step size underflow".to_string(),
            });
        }

        // full step and two half steps; keep the Richardson-corrected value
        let y_full = rk4_step(&rhs, rho, &y, &dy, h_step, &mut scratch, &mut k);
        let y_half = rk4_step(&rhs, rho, &y, &dy, 0.5 * h_step, &mut scratch, &mut k);
        let mut dy_half = vec![0.0; dim];
        rhs(rho + 0.5 * h_step, &y_half, &mut dy_half);
        let y_two = rk4_step(
            &rhs,
            rho + 0.5 * h_step,
            &y_half,
            &dy_half,
            0.5 * h_step,
            &mut scratch,
            &mut k,
        );

        let mut err = 0.0_f64;
        for i in 0..dim {
            err = err.max((y_full[i] - y_two[i]).abs() / 15.0);
        }

        if let StepControl::Adaptive { tol, .. } = opts.control {
            let scale = 1.0 + y.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            if err > tol * scale && h_step > 16.0 * f64::EPSILON * span.width() {
                h = 0.5 * h_step;
                continue;
            }
            if err < 0.02 * tol * scale {
                h = 1.5 * h_step;
            }
        }
        max_err = max_err.max(err);

        let rho_next = rho + h_step;
        let mut y_next = y_two;
        for v in &mut y_next {
            if !v.is_finite() {
                return Err(Error::IntegrationFailure {
                    rho: rho_next,
                    message: "state became non-finite".to_string(),
                });
            }
        }
        let mut dy_next = vec![0.0; dim];
        rhs(rho_next, &y_next, &mut dy_next);

        if let Some(ev) = opts.event {
            let c = ev.component;
            let (a, b) = (y[c], y_next[c]);
            if a != 0.0 && (a.signum() != b.signum() || b == 0.0) {
                let hit = refine_crossing(rho, rho_next, &y, &dy, &y_next, &dy_next, c);
                rho = hit.rho;
                y = hit.y.clone();
                rhs(rho, &y, &mut dy);
                if opts.store == StorePolicy::All || steps.len() < 2 {
                    steps.push(OdeState {
                        rho,
                        y: y.clone(),
                        dy: dy.clone(),
                    });
                } else {
                    *steps.last_mut().unwrap() = OdeState {
                        rho,
                        y: y.clone(),
                        dy: dy.clone(),
                    };
                }
                event = Some(hit);
                break;
            }
        }

        rho = rho_next;
        y = y_next;
        dy = dy_next;
        match opts.store {
            StorePolicy::All => steps.push(OdeState {
                rho,
                y: y.clone(),
                dy: dy.clone(),
            }),
            StorePolicy::Endpoints => {
                if steps.len() == 1 {
                    steps.push(OdeState {
                        rho,
                        y: y.clone(),
                        dy: dy.clone(),
                    });
                } else {
                    *steps.last_mut().unwrap() = OdeState {
                        rho,
                        y: y.clone(),
                        dy: dy.clone(),
                    };
                }
            }
        }
    }

    Ok(Trajectory {
        steps,
        event,
        max_step_error: max_err,
        dense: opts.store == StorePolicy::All,
    })
}

struct StepScratch {
    k1: Vec<f64>,
    k2: Vec<f64>,
    k3: Vec<f64>,
    k4: Vec<f64>,
    tmp: Vec<f64>,
}

impl StepScratch {
    fn new(dim: usize) -> Self {
        StepScratch {
            k1: vec![0.0; dim],
            k2: vec![0.0; dim],
            k3: vec![0.0; dim],
            k4: vec![0.0; dim],
            tmp: vec![0.0; dim],
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn rk4_step<F>(
    rhs: &F,
    t: f64,
    y: &[f64],
    dy: &[f64],
    h: f64,
    s: &mut StepScratch,
    _k: &mut [f64],
) -> Vec<f64>
where
    F: Fn(f64, &[f64], &mut [f64]),
{
    let dim = y.len();
    s.k1.copy_from_slice(dy);
    for i in 0..dim {
        s.tmp[i] = y[i] + 0.5 * h * s.k1[i];
    }
    rhs(t + 0.5 * h, &s.tmp, &mut s.k2);
    for i in 0..dim {
        s.tmp[i] = y[i] + 0.5 * h * s.k2[i];
    }
    rhs(t + 0.5 * h, &s.tmp, &mut s.k3);
    for i in 0..dim {
        s.tmp[i] = y[i] + h * s.k3[i];
    }
    rhs(t + h, &s.tmp, &mut s.k4);
    (0..dim)
        .map(|i| y[i] + h / 6.0 * (s.k1[i] + 2.0 * s.k2[i] + 2.0 * s.k3[i] + s.k4[i]))
        .collect()
}

/// Cubic Hermite interpolation of a single step.
fn hermite(t0: f64, t1: f64, y0: &[f64], d0: &[f64], y1: &[f64], d1: &[f64], t: f64) -> Vec<f64> {
    let h = t1 - t0;
    let s = (t - t0) / h;
    let s2 = s * s;
    let s3 = s2 * s;
    let (h00, h10, h01, h11) = (
        2.0 * s3 - 3.0 * s2 + 1.0,
        s3 - 2.0 * s2 + s,
        -2.0 * s3 + 3.0 * s2,
        s3 - s2,
    );
    (0..y0.len())
        .map(|i| h00 * y0[i] + h10 * h * d0[i] + h01 * y1[i] + h11 * h * d1[i])
        .collect()
}

fn refine_crossing(
    t0: f64,
    t1: f64,
    y0: &[f64],
    d0: &[f64],
    y1: &[f64],
    d1: &[f64],
    component: usize,
) -> EventHit {
    let g = |t: f64| hermite(t0, t1, y0, d0, y1, d1, t)[component];
    let (mut a, mut b) = (t0, t1);
    let mut ga = g(a);
    if ga == 0.0 {
        // the crossing sits exactly on the left node
        return EventHit {
            rho: a,
            y: y0.to_vec(),
            bracket_width: 0.0,
        };
    }
    while b - a > EVENT_BRACKET_WIDTH {
        let m = 0.5 * (a + b);
        let gm = g(m);
        if gm == 0.0 {
            a = m;
            b = m;
            break;
        }
        if gm.signum() == ga.signum() {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    let t = 0.5 * (a + b);
    let mut y = hermite(t0, t1, y0, d0, y1, d1, t);
    y[component] = 0.0;
    EventHit {
        rho: t,
        y,
        bracket_width: b - a,
    }
}
