//! Self-contained numerical kernels: Bessel functions, quadrature, root
//! finding and ODE integration. Everything here is pure and reentrant.

mod bessel;
mod ode;
mod quad;
mod root;

pub(crate) use bessel::cross_product_raw;
pub use bessel::{bessel_j0, bessel_j1, bessel_y0, bessel_y1, cross_product_fn};
pub(crate) use bessel::{
    j0 as bessel_j0_raw, j1 as bessel_j1_raw, y0 as bessel_y0_raw, y1 as bessel_y1_raw,
};
pub use ode::{integrate_ode, Event, OdeOptions, OdeState, StepControl, StorePolicy, Trajectory};
pub use quad::{integrate, CumulativeProfile};
pub use root::{find_root, scan_first_bracket};

use crate::{Error, Result};

/// A finite interval `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "interval endpoints must be finite, got [{lo}, {hi}]"
            )));
        }
        if lo >= hi {
            return Err(Error::InvalidArgument(format!(
                "interval requires lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}
