//! Independent verification engine: finite-difference momentum and
//! divergence residuals in polar coordinates, boundary and jump audits,
//! energy quadratures, convergence studies and large-radius limit checks.

mod checks;
mod residual;

pub use checks::{
    boundary_check, convergence_study, energy_quadrature, gradient_circulation, jump_check,
    limit_suite, ConvergenceReport, JumpReport, LimitReport, LimitRow, ResidualForm,
};
pub use residual::{ns_residual, stokes_residual, ResidualReport};

use crate::numerics::Interval;
use crate::{Error, Result};
use std::f64::consts::TAU;

/// Angular topology of the evaluation grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThetaTopology {
    /// Uniform nodes on `[0, 2 pi)` with wraparound differencing.
    Periodic,
    /// Uniform nodes on `[delta, 2 pi - delta]`, excluding a band of width
    /// `delta` on each side of the cut; one-sided differencing at the ends.
    Cut { delta: f64 },
}

/// Tensor grid in `(rho, theta)` used by the residual engine. Node counts
/// include the radial boundary rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarGrid {
    n_rho: usize,
    n_theta: usize,
    rho_range: Interval,
    topology: ThetaTopology,
}

impl PolarGrid {
    pub fn new(
        n_rho: usize,
        n_theta: usize,
        rho_range: Interval,
        topology: ThetaTopology,
    ) -> Result<Self> {
        if n_rho < 8 || n_theta < 8 {
            return Err(Error::InvalidArgument(format!(
                "grid needs at least 8 nodes per direction, got {n_rho} x {n_theta}"
            )));
        }
        if let ThetaTopology::Cut { delta } = topology {
            if !(delta > 0.0) || delta >= 0.5 {
                return Err(Error::InvalidArgument(format!(
                    "cut half-width must lie in (0, 0.5), got {delta}"
                )));
            }
        }
        Ok(PolarGrid {
            n_rho,
            n_theta,
            rho_range,
            topology,
        })
    }

    /// Square periodic grid over the annulus.
    pub fn periodic(n: usize, ann: &crate::solutions::Annulus) -> Result<Self> {
        Self::new(
            n,
            n,
            Interval::new(1.0, ann.outer())?,
            ThetaTopology::Periodic,
        )
    }

    /// Square cut grid over the annulus with the default band width 1e-3.
    pub fn cut(n: usize, ann: &crate::solutions::Annulus) -> Result<Self> {
        Self::new(
            n,
            n,
            Interval::new(1.0, ann.outer())?,
            ThetaTopology::Cut { delta: 1e-3 },
        )
    }

    pub fn n_rho(&self) -> usize {
        self.n_rho
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn rho_range(&self) -> Interval {
        self.rho_range
    }

    pub fn topology(&self) -> ThetaTopology {
        self.topology
    }

    pub fn rho_spacing(&self) -> f64 {
        self.rho_range.width() / (self.n_rho - 1) as f64
    }

    pub fn theta_spacing(&self) -> f64 {
        match self.topology {
            ThetaTopology::Periodic => TAU / self.n_theta as f64,
            ThetaTopology::Cut { delta } => (TAU - 2.0 * delta) / (self.n_theta - 1) as f64,
        }
    }

    pub fn rho_node(&self, i: usize) -> f64 {
        self.rho_range.lo() + self.rho_spacing() * i as f64
    }

    pub fn theta_node(&self, j: usize) -> f64 {
        match self.topology {
            ThetaTopology::Periodic => self.theta_spacing() * j as f64,
            ThetaTopology::Cut { delta } => delta + self.theta_spacing() * j as f64,
        }
    }

    /// Same extent with both node counts scaled by `factor`.
    pub fn refined(&self, factor: usize) -> Result<Self> {
        Self::new(
            self.n_rho * factor,
            self.n_theta * factor,
            self.rho_range,
            self.topology,
        )
    }
}
