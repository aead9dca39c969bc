//! Computable constants of the annulus: the first Laplace-Dirichlet
//! eigenvalue, Sobolev-constant bounds, the torsion function, and the
//! shooting-method radial Sobolev constant.

mod eigen;
mod shooting;
mod sobolev;

pub use eigen::{eigenfunction, eigenvalue, EigenResult};
pub use shooting::{radial_sobolev, shoot_first_zero, ShootResult};
pub use sobolev::{
    default_trials, first_j0_zero, inequality_suite, kappa1, poincare_equality_gap, s4_bounds,
    tobias_check, torsion_function, InequalityReport, InequalityRow, SobolevBounds, TobiasReport,
    Torsion,
};
