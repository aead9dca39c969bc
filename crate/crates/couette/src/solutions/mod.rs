//! The catalog of explicit flows: constructors, evaluators, coefficients,
//! thresholds, fluxes and symmetry maps for every closed-form solution on the
//! annulus, the disk and the exterior domain.

pub mod catalog;
pub mod coeffs;
mod field;
mod profile;

pub use catalog::{
    cut_potential, cut_potential_field, cut_potential_gradient, disk_couette, exterior_catalog,
    flux_carrier, generalized_tc, incomplete_family, special_forcing_tc, stokes_annulus_rotating,
    stokes_annulus_scaled, stokes_annulus_uniform, taylor_couette, ExteriorKind, RotatingScale,
};
pub use coeffs::{
    coefficient_A, dirichlet_energy_flux_carrier, lambda_star, stokes_constants,
    sup_velocity_bound_check, threshold_check, threshold_force, BoundCheck, StokesConstants,
    ThresholdCheck,
};
pub use field::{
    evaluate, flux, rotate_field, FieldBuilder, FieldParams, FlowDomain, FlowField, FluxDefinition,
    PolarPoint, Sample, SolutionKind,
};
pub use profile::{Forcing, RadialProfile};

use crate::{Error, Result};

/// The annulus `1 < rho < R`; the inner radius is fixed at 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus {
    r_outer: f64,
}

impl Annulus {
    pub fn new(r_outer: f64) -> Result<Self> {
        if !r_outer.is_finite() || r_outer <= 1.0 {
            return Err(Error::InvalidArgument(format!(
                "annulus outer radius must satisfy R > 1, got {r_outer}"
            )));
        }
        Ok(Annulus { r_outer })
    }

    pub fn outer(&self) -> f64 {
        self.r_outer
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn annulus_rejects_degenerate_radii() {
        assert!(Annulus::new(2.0).is_ok());
        assert!(Annulus::new(1.0).is_err());
        assert!(Annulus::new(0.5).is_err());
        assert!(Annulus::new(f64::NAN).is_err());
    }
}
