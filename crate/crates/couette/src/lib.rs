//! Exact solutions and computable constants for the planar Taylor-Couette
//! system in the annulus `1 < rho < R`.
//!
//! The crate has four layers:
//!
//! * [`numerics`]: self-contained special functions (order-zero and order-one
//!   Bessel functions), adaptive Simpson quadrature, bracketing root finding,
//!   and a classical Runge-Kutta integrator with zero-crossing event detection.
//! * [`solutions`]: the catalog of closed-form flows: the classical and
//!   generalized Taylor-Couette flows, the incomplete family with multivalued
//!   pressure, flux carriers, annular and exterior Stokes solutions, and the
//!   disk Couette flow, together with their coefficients, thresholds, fluxes
//!   and symmetry maps.
//! * [`spectral`]: the first Laplace-Dirichlet eigenvalue of the annulus via
//!   the Bessel cross-product equation, Sobolev constant bounds, the torsion
//!   function, and the shooting-method radial Sobolev constant.
//! * [`verify`]: an independent finite-difference residual engine in polar
//!   coordinates with boundary, jump, energy, convergence and limit audits.
//!
//! All computations are deterministic and all types are `Send + Sync`; there
//! is no global mutable state.
//!
//! ```
//! use couette::solutions::{catalog, flux, Annulus, FluxDefinition};
//! use couette::spectral::eigenvalue;
//!
//! let ann = Annulus::new(2.0)?;
//! let eig = eigenvalue(&ann)?;
//! assert!((eig.lambda - 9.75332).abs() < 1e-4);
//!
//! let carrier = catalog::flux_carrier(&ann, 1.0, 1.0);
//! let phi = flux(&carrier, FluxDefinition::Weighted)?;
//! assert!((phi - 1.0).abs() < 1e-9);
//! # Ok::<(), couette::Error>(())
//! ```

// negated comparisons like `!(tol > 0.0)` are deliberate: they reject NaN
// together with the out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod numerics;
pub mod report;
pub mod solutions;
pub mod spectral;
pub mod verify;

use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Non-finite or otherwise malformed input.
    InvalidArgument(String),
    /// Input outside the mathematical domain of the operation.
    Domain(String),
    /// A point fell outside the field's domain during batch evaluation.
    OutOfDomain { index: usize, rho: f64 },
    /// Quadrature could not reach the requested tolerance; carries the best
    /// estimate and the accumulated error bound.
    AccuracyFailure { estimate: f64, error_bound: f64 },
    /// Root bracket endpoints do not straddle a sign change.
    NoSignChange { lo: f64, hi: f64 },
    /// Scanning found no sign change before the cutoff.
    BracketNotFound { start: f64, max_x: f64 },
    /// ODE integration failed at the reported radial coordinate.
    IntegrationFailure { rho: f64, message: String },
    /// The cut potential has no single value on the cut itself.
    CutAmbiguity { rho: f64 },
    /// Operation not defined for this field (e.g. rotating a multivalued pressure).
    Unsupported(String),
    /// An internal consistency check failed (signals a numerical breakdown).
    Inconsistency(String),
    /// Malformed tabulated-profile input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::OutOfDomain { index, rho } => {
                write!(f, "point {index} (rho = {rho}) is outside the field domain")
            }
            Error::AccuracyFailure { estimate, error_bound } => write!(
                f,
                "quadrature accuracy failure: best estimate {estimate} with error bound {error_bound}"
            ),
            Error::NoSignChange { lo, hi } => {
                write!(f, "no sign change on bracket [{lo}, {hi}]")
            }
            Error::BracketNotFound { start, max_x } => {
                write!(f, "no sign change found scanning [{start}, {max_x}]")
            }
            Error::IntegrationFailure { rho, message } => {
                write!(f, "ODE integration failed at rho = {rho}: {message}")
            }
            Error::CutAmbiguity { rho } => {
                write!(f, "cut potential evaluated on the cut (rho = {rho}, theta = 0)")
            }
            Error::Unsupported(msg) => write!(f, "unsupported operation: {msg}"),
            Error::Inconsistency(msg) => write!(f, "numerical consistency error: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
