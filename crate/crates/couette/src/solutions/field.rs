//! The `FlowField` abstraction: paired velocity/pressure evaluators in polar
//! components with metadata, plus batch evaluation, the rotation map and the
//! transversal flux functionals.

use super::profile::RadialProfile;
use crate::numerics::{integrate, Interval};
use crate::{Error, Result};
use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

/// Region a field is defined on. The annulus and exterior have inner radius 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FlowDomain {
    Annulus { r_outer: f64 },
    Disk { radius: f64 },
    Exterior,
}

impl FlowDomain {
    pub fn contains(&self, rho: f64) -> bool {
        match *self {
            FlowDomain::Annulus { r_outer } => (1.0..=r_outer).contains(&rho),
            FlowDomain::Disk { radius } => (0.0..=radius).contains(&rho),
            FlowDomain::Exterior => rho >= 1.0,
        }
    }
}

/// Catalog tag. `Display` yields the kebab-case name used by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionKind {
    TaylorCouette,
    GeneralizedTc,
    SpecialForcingTc,
    Incomplete,
    FluxCarrier,
    StokesUniform,
    StokesScaled,
    StokesRotating,
    DiskCouette,
    ExteriorLog,
    ExteriorRigid,
    ExteriorLinear,
    ExteriorLogFlux,
    CutPotential,
}

impl SolutionKind {
    pub const CLI_NAMES: [(&'static str, SolutionKind); 13] = [
        ("taylor-couette", SolutionKind::TaylorCouette),
        ("generalized-tc", SolutionKind::GeneralizedTc),
        ("special-forcing-tc", SolutionKind::SpecialForcingTc),
        ("incomplete", SolutionKind::Incomplete),
        ("flux-carrier", SolutionKind::FluxCarrier),
        ("stokes-uniform", SolutionKind::StokesUniform),
        ("stokes-scaled", SolutionKind::StokesScaled),
        ("stokes-rotating", SolutionKind::StokesRotating),
        ("disk-couette", SolutionKind::DiskCouette),
        ("exterior-log", SolutionKind::ExteriorLog),
        ("exterior-rigid", SolutionKind::ExteriorRigid),
        ("exterior-linear", SolutionKind::ExteriorLinear),
        ("exterior-logflux", SolutionKind::ExteriorLogFlux),
    ];
}

impl fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = Self::CLI_NAMES
            .iter()
            .find(|(_, k)| k == self)
            .map(|(n, _)| *n)
            .unwrap_or("cut-potential");
        f.write_str(name)
    }
}

impl std::str::FromStr for SolutionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::CLI_NAMES
            .iter()
            .find(|(n, _)| *n == s)
            .map(|(_, k)| *k)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown solution name `{s}`")))
    }
}

/// Point in polar coordinates with `theta` normalized into `[0, 2*pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub rho: f64,
    pub theta: f64,
}

impl PolarPoint {
    pub fn new(rho: f64, theta: f64) -> Self {
        PolarPoint {
            rho,
            theta: wrap_angle(theta),
        }
    }

    pub fn cartesian(&self) -> (f64, f64) {
        (self.rho * self.theta.cos(), self.rho * self.theta.sin())
    }
}

pub(crate) fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t == TAU {
        0.0
    } else {
        t
    }
}

/// Solution parameters carried as metadata.
#[derive(Debug, Clone, Default)]
pub struct FieldParams {
    pub omega: Option<f64>,
    pub lambda: Option<f64>,
    pub phi: Option<f64>,
    pub k: Option<f64>,
    /// Accumulated angle of `rotate_field` applications.
    pub rotation: Option<f64>,
    pub forcing_label: Option<String>,
}

type VelocityFn = Arc<dyn Fn(f64, f64) -> (f64, f64) + Send + Sync>;
type PressureFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;
type GradientFn = Arc<dyn Fn(f64, f64) -> (f64, f64) + Send + Sync>;

/// A velocity/pressure pair in polar components.
///
/// Velocity maps `(rho, theta)` to `(u_rho, u_theta)`. Pressure maps to a
/// scalar; for fields with `multivalued_pressure` the value lives on the cut
/// annulus (theta in `(0, 2*pi)`, cut at theta = 0) and an analytic pressure
/// gradient `(d_rho p, (1/rho) d_theta p)` is always present so that nothing
/// is ever differenced across the cut.
#[derive(Clone)]
pub struct FlowField {
    kind: SolutionKind,
    domain: FlowDomain,
    multivalued_pressure: bool,
    params: FieldParams,
    velocity: VelocityFn,
    pressure: PressureFn,
    pressure_gradient: Option<GradientFn>,
    azimuthal: Option<RadialProfile>,
}

impl fmt::Debug for FlowField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlowField")
            .field("kind", &self.kind)
            .field("domain", &self.domain)
            .field("multivalued_pressure", &self.multivalued_pressure)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

/// Assembles a [`FlowField`] from evaluator closures. Catalog constructors
/// use this internally; it is public so custom fields can run through the
/// verification engine.
pub struct FieldBuilder {
    kind: SolutionKind,
    domain: FlowDomain,
    multivalued_pressure: bool,
    params: FieldParams,
    velocity: VelocityFn,
    pressure: PressureFn,
    pressure_gradient: Option<GradientFn>,
    azimuthal: Option<RadialProfile>,
}

impl FieldBuilder {
    pub fn new<V, P>(kind: SolutionKind, domain: FlowDomain, velocity: V, pressure: P) -> Self
    where
        V: Fn(f64, f64) -> (f64, f64) + Send + Sync + 'static,
        P: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        FieldBuilder {
            kind,
            domain,
            multivalued_pressure: false,
            params: FieldParams::default(),
            velocity: Arc::new(velocity),
            pressure: Arc::new(pressure),
            pressure_gradient: None,
            azimuthal: None,
        }
    }

    /// Rotationally invariant field `G(rho) theta_hat` with radial pressure.
    pub fn rotational<P>(
        kind: SolutionKind,
        domain: FlowDomain,
        profile: RadialProfile,
        pressure: P,
    ) -> Self
    where
        P: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        let g = profile.clone();
        FieldBuilder {
            kind,
            domain,
            multivalued_pressure: false,
            params: FieldParams::default(),
            velocity: Arc::new(move |rho, _| (0.0, g.eval(rho))),
            pressure: Arc::new(pressure),
            pressure_gradient: None,
            azimuthal: Some(profile),
        }
    }

    /// Marks the pressure as multivalued across the cut and attaches the
    /// mandatory analytic gradient.
    pub fn multivalued<G>(mut self, gradient: G) -> Self
    where
        G: Fn(f64, f64) -> (f64, f64) + Send + Sync + 'static,
    {
        self.multivalued_pressure = true;
        self.pressure_gradient = Some(Arc::new(gradient));
        self
    }

    pub fn gradient<G>(mut self, gradient: G) -> Self
    where
        G: Fn(f64, f64) -> (f64, f64) + Send + Sync + 'static,
    {
        self.pressure_gradient = Some(Arc::new(gradient));
        self
    }

    pub fn params(mut self, params: FieldParams) -> Self {
        self.params = params;
        self
    }

    pub fn build(self) -> FlowField {
        FlowField {
            kind: self.kind,
            domain: self.domain,
            multivalued_pressure: self.multivalued_pressure,
            params: self.params,
            velocity: self.velocity,
            pressure: self.pressure,
            pressure_gradient: self.pressure_gradient,
            azimuthal: self.azimuthal,
        }
    }
}

impl FlowField {
    pub fn kind(&self) -> SolutionKind {
        self.kind
    }

    pub fn domain(&self) -> FlowDomain {
        self.domain
    }

    pub fn multivalued_pressure(&self) -> bool {
        self.multivalued_pressure
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    /// Azimuthal profile `G` with `u = G(rho) theta_hat`, when the field is
    /// rotationally invariant.
    pub fn azimuthal_profile(&self) -> Option<&RadialProfile> {
        self.azimuthal.as_ref()
    }

    pub fn is_rotationally_invariant(&self) -> bool {
        self.azimuthal.is_some()
    }

    /// Polar velocity components `(u_rho, u_theta)` at a domain point.
    pub fn velocity(&self, rho: f64, theta: f64) -> Result<(f64, f64)> {
        if !self.domain.contains(rho) {
            return Err(Error::Domain(format!(
                "rho = {rho} outside {:?}",
                self.domain
            )));
        }
        Ok((self.velocity)(rho, wrap_angle(theta)))
    }

    /// Pressure at a domain point. For multivalued fields the value is the
    /// branch on the cut annulus (theta strictly inside `(0, 2*pi)`).
    pub fn pressure(&self, rho: f64, theta: f64) -> Result<f64> {
        if !self.domain.contains(rho) {
            return Err(Error::Domain(format!(
                "rho = {rho} outside {:?}",
                self.domain
            )));
        }
        Ok((self.pressure)(rho, wrap_angle(theta)))
    }

    /// Analytic polar pressure gradient `(d_rho p, (1/rho) d_theta p)`, when present.
    pub fn pressure_gradient(&self, rho: f64, theta: f64) -> Option<(f64, f64)> {
        self.pressure_gradient
            .as_ref()
            .map(|g| g(rho, wrap_angle(theta)))
    }

    pub fn has_pressure_gradient(&self) -> bool {
        self.pressure_gradient.is_some()
    }
}

/// One evaluated sample: polar and Cartesian velocity components plus the
/// pressure where it is single-valued.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub rho: f64,
    pub theta: f64,
    pub u_rho: f64,
    pub u_theta: f64,
    pub ux: f64,
    pub uy: f64,
    pub pressure: Option<f64>,
}

/// Batch evaluation at a list of points; out-of-domain points report their index.
pub fn evaluate(field: &FlowField, points: &[PolarPoint]) -> Result<Vec<Sample>> {
    let mut out = Vec::with_capacity(points.len());
    for (index, p) in points.iter().enumerate() {
        if !field.domain().contains(p.rho) {
            return Err(Error::OutOfDomain { index, rho: p.rho });
        }
        let (u_rho, u_theta) = (field.velocity)(p.rho, p.theta);
        let (sin_t, cos_t) = p.theta.sin_cos();
        let ux = u_rho * cos_t - u_theta * sin_t;
        let uy = u_rho * sin_t + u_theta * cos_t;
        let pressure = if field.multivalued_pressure() {
            None
        } else {
            Some((field.pressure)(p.rho, p.theta))
        };
        out.push(Sample {
            rho: p.rho,
            theta: p.theta,
            u_rho,
            u_theta,
            ux,
            uy,
            pressure,
        });
    }
    Ok(out)
}

/// Rotation map: `u_phi(xi) = Rot(phi)^T u(Rot(phi) xi)`, `p_phi(xi) = p(Rot(phi) xi)`.
/// In polar components this is a pure shift of the angular argument.
/// Fields with multivalued pressure are rejected (the shift would move the cut).
pub fn rotate_field(field: &FlowField, phi: f64) -> Result<FlowField> {
    if field.multivalued_pressure() {
        return Err(Error::Unsupported(
            "cannot rotate a field with multivalued pressure".to_string(),
        ));
    }
    let mut params = field.params.clone();
    params.rotation = Some(wrap_angle(params.rotation.unwrap_or(0.0) + phi));
    let vel = field.velocity.clone();
    let pres = field.pressure.clone();
    let grad = field.pressure_gradient.clone();
    Ok(FlowField {
        kind: field.kind,
        domain: field.domain,
        multivalued_pressure: false,
        params,
        velocity: Arc::new(move |rho, theta| vel(rho, wrap_angle(theta + phi))),
        pressure: Arc::new(move |rho, theta| pres(rho, wrap_angle(theta + phi))),
        pressure_gradient: grad
            .map(|g| -> GradientFn { Arc::new(move |rho, theta| g(rho, wrap_angle(theta + phi))) }),
        azimuthal: field.azimuthal.clone(),
    })
}

/// Which flux functional to evaluate across the section `theta = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FluxDefinition {
    /// `int_1^R rho G(rho) drho`; reproduces the flux-carrier constant exactly.
    Weighted,
    /// `int_1^R G(rho) drho`; the literal line integral.
    Line,
}

impl std::str::FromStr for FluxDefinition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weighted" => Ok(FluxDefinition::Weighted),
            "line" => Ok(FluxDefinition::Line),
            other => Err(Error::InvalidArgument(format!(
                "unknown flux definition `{other}`"
            ))),
        }
    }
}

/// Transversal flux of a field across the section. The azimuthal profile is
/// used when present; general fields are reduced by sampling `u_theta` at
/// `theta = 0`. Requires a bounded domain.
pub fn flux(field: &FlowField, definition: FluxDefinition) -> Result<f64> {
    let (lo, hi) = match field.domain() {
        FlowDomain::Annulus { r_outer } => (1.0, r_outer),
        FlowDomain::Disk { radius } => (0.0, radius),
        FlowDomain::Exterior => {
            return Err(Error::InvalidArgument(
                "flux is defined on bounded domains only".to_string(),
            ))
        }
    };
    let g = |rho: f64| match field.azimuthal_profile() {
        Some(p) => p.eval(rho),
        None => (field.velocity)(rho, 0.0).1,
    };
    let iv = Interval::new(lo, hi)?;
    match definition {
        FluxDefinition::Weighted => integrate(|r| r * g(r), iv, 1e-10),
        FluxDefinition::Line => integrate(g, iv, 1e-10),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solutions::catalog::taylor_couette;
    use crate::solutions::Annulus;

    #[test]
    fn fields_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<FlowField>();
        assert_send_sync::<crate::solutions::RadialProfile>();
    }

    #[test]
    fn kind_names_roundtrip() {
        for (name, kind) in SolutionKind::CLI_NAMES {
            assert_eq!(name.parse::<SolutionKind>().unwrap(), kind);
            assert_eq!(kind.to_string(), name);
        }
        assert!("no-such-solution".parse::<SolutionKind>().is_err());
    }

    #[test]
    fn polar_point_normalizes_angle() {
        let p = PolarPoint::new(1.5, -0.5);
        assert!((p.theta - (TAU - 0.5)).abs() < 1e-15);
        let q = PolarPoint::new(1.5, TAU + 0.25);
        assert!((q.theta - 0.25).abs() < 1e-15);
    }

    #[test]
    fn evaluate_reports_cartesian_components() {
        let ann = Annulus::new(2.0).unwrap();
        let field = taylor_couette(&ann, 1.0);
        let samples = evaluate(&field, &[PolarPoint::new(1.5, 0.0)]).unwrap();
        assert!((samples[0].ux - 0.0).abs() < 1e-15);
        assert!((samples[0].uy - 5.0 / 9.0).abs() < 1e-14);
        assert!(samples[0].pressure.is_some());
    }

    #[test]
    fn evaluate_empty_and_out_of_domain() {
        let ann = Annulus::new(2.0).unwrap();
        let field = taylor_couette(&ann, 1.0);
        assert!(evaluate(&field, &[]).unwrap().is_empty());
        match evaluate(
            &field,
            &[PolarPoint::new(1.5, 0.0), PolarPoint::new(0.5, 0.0)],
        ) {
            Err(Error::OutOfDomain { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected out-of-domain, got {other:?}"),
        }
    }

    #[test]
    fn rotation_is_identity_on_rotationally_invariant_fields() {
        let ann = Annulus::new(2.0).unwrap();
        let field = taylor_couette(&ann, 1.0);
        let rotated = rotate_field(&field, 1.234).unwrap();
        for &(rho, theta) in &[(1.0, 0.3), (1.5, 2.0), (2.0, 5.5)] {
            let a = field.velocity(rho, theta).unwrap();
            let b = rotated.velocity(rho, theta).unwrap();
            assert!((a.0 - b.0).abs() < 1e-13 && (a.1 - b.1).abs() < 1e-13);
        }
    }

    #[test]
    fn rotation_composes_additively() {
        use crate::solutions::catalog::stokes_annulus_uniform;
        let ann = Annulus::new(2.0).unwrap();
        let field = stokes_annulus_uniform(&ann);
        let once = rotate_field(&rotate_field(&field, 0.7).unwrap(), 1.1).unwrap();
        let direct = rotate_field(&field, 1.8).unwrap();
        for &(rho, theta) in &[(1.2, 0.0), (1.6, 2.5), (2.0, 4.0)] {
            let a = once.velocity(rho, theta).unwrap();
            let b = direct.velocity(rho, theta).unwrap();
            assert!((a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
            let pa = once.pressure(rho, theta).unwrap();
            let pb = direct.pressure(rho, theta).unwrap();
            assert!((pa - pb).abs() < 1e-12);
        }
    }

    #[test]
    fn rotation_by_zero_is_identity() {
        let ann = Annulus::new(2.0).unwrap();
        let field = taylor_couette(&ann, 1.0);
        let rot = rotate_field(&field, 0.0).unwrap();
        let a = field.velocity(1.3, 0.9).unwrap();
        let b = rot.velocity(1.3, 0.9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn weighted_flux_of_classical_tc() {
        let ann = Annulus::new(2.0).unwrap();
        let field = taylor_couette(&ann, 1.0);
        let f = flux(&field, FluxDefinition::Weighted).unwrap();
        assert!((f - 8.0 / 9.0).abs() < 1e-10, "got {f}");
    }

    #[test]
    fn flux_of_zero_field_vanishes() {
        let ann = Annulus::new(2.0).unwrap();
        let field = taylor_couette(&ann, 0.0);
        assert!(flux(&field, FluxDefinition::Weighted).unwrap().abs() < 1e-12);
        assert!(flux(&field, FluxDefinition::Line).unwrap().abs() < 1e-12);
    }
}
