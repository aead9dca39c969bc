//! Scalar radial profiles on `[1, R]`: closed-form families, tabulated data
//! with linear interpolation, and wrapped analytic functions.

use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A scalar function of the radial coordinate, used for forcing components,
/// azimuthal velocity profiles, eigenfunctions and trial functions.
#[derive(Clone)]
pub struct RadialProfile {
    kind: ProfileKind,
}

#[derive(Clone)]
enum ProfileKind {
    Zero,
    Constant(f64),
    /// `c * rho^k`
    Power {
        coef: f64,
        exponent: f64,
    },
    /// `lambda / rho`, the special azimuthal forcing
    InverseRho {
        strength: f64,
    },
    /// ordered `(rho, value)` samples, linear interpolation
    Tabulated {
        samples: Arc<Vec<(f64, f64)>>,
    },
    /// arbitrary closed form, with an optional analytic derivative
    Analytic {
        label: &'static str,
        f: ScalarFn,
        df: Option<ScalarFn>,
    },
}

impl RadialProfile {
    pub fn zero() -> Self {
        RadialProfile {
            kind: ProfileKind::Zero,
        }
    }

    pub fn constant(value: f64) -> Self {
        RadialProfile {
            kind: ProfileKind::Constant(value),
        }
    }

    pub fn power(coef: f64, exponent: f64) -> Self {
        RadialProfile {
            kind: ProfileKind::Power { coef, exponent },
        }
    }

    /// The profile `strength / rho`.
    pub fn inverse_rho(strength: f64) -> Self {
        RadialProfile {
            kind: ProfileKind::InverseRho { strength },
        }
    }

    pub fn analytic<F>(label: &'static str, f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        RadialProfile {
            kind: ProfileKind::Analytic {
                label,
                f: Arc::new(f),
                df: None,
            },
        }
    }

    pub fn analytic_with_derivative<F, G>(label: &'static str, f: F, df: G) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        RadialProfile {
            kind: ProfileKind::Analytic {
                label,
                f: Arc::new(f),
                df: Some(Arc::new(df)),
            },
        }
    }

    /// Builds a tabulated profile. Samples must be finite, strictly increasing
    /// in `rho`, and contain at least two points.
    pub fn tabulated(samples: Vec<(f64, f64)>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidArgument(
                "tabulated profile needs at least two samples".to_string(),
            ));
        }
        for (i, &(rho, v)) in samples.iter().enumerate() {
            if !rho.is_finite() || !v.is_finite() {
                return Err(Error::InvalidArgument(format!(
                    "tabulated sample {i} is not finite: ({rho}, {v})"
                )));
            }
            if i > 0 && rho <= samples[i - 1].0 {
                return Err(Error::InvalidArgument(format!(
                    "tabulated samples must be strictly increasing in rho (sample {i})"
                )));
            }
        }
        Ok(RadialProfile {
            kind: ProfileKind::Tabulated {
                samples: Arc::new(samples),
            },
        })
    }

    /// Parses the two-column `rho,value` CSV format (header row required,
    /// strictly increasing `rho` starting at 1.0 and ending at `r_outer`).
    pub fn tabulated_from_csv(text: &str, r_outer: f64) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty forcing CSV".to_string()))?;
        let header_fields: Vec<&str> = header.split(',').map(str::trim).collect();
        if header_fields.len() != 2
            || !header_fields[0].eq_ignore_ascii_case("rho")
            || !header_fields[1].eq_ignore_ascii_case("value")
        {
            return Err(Error::Parse(format!(
                "forcing CSV must start with a `rho,value` header, got `{header}`"
            )));
        }
        let mut samples = Vec::new();
        for (lineno, line) in lines.enumerate() {
            let cols: Vec<&str> = line.split(',').map(str::trim).collect();
            if cols.len() != 2 {
                return Err(Error::Parse(format!(
                    "line {}: expected two columns, got {}",
                    lineno + 2,
                    cols.len()
                )));
            }
            let rho: f64 = cols[0]
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad rho `{}`", lineno + 2, cols[0])))?;
            let value: f64 = cols[1].parse().map_err(|_| {
                Error::Parse(format!("line {}: bad value `{}`", lineno + 2, cols[1]))
            })?;
            samples.push((rho, value));
        }
        if samples.is_empty() {
            return Err(Error::Parse("forcing CSV has no data rows".to_string()));
        }
        let first = samples[0].0;
        let last = samples[samples.len() - 1].0;
        if (first - 1.0).abs() > 1e-9 {
            return Err(Error::Parse(format!(
                "forcing CSV must start at rho = 1.0, got {first}"
            )));
        }
        if (last - r_outer).abs() > 1e-9 * r_outer.max(1.0) {
            return Err(Error::Parse(format!(
                "forcing CSV must end at rho = R = {r_outer}, got {last}"
            )));
        }
        Self::tabulated(samples)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.kind, ProfileKind::Zero)
            || matches!(self.kind, ProfileKind::Constant(c) if c == 0.0)
    }

    pub fn eval(&self, rho: f64) -> f64 {
        match &self.kind {
            ProfileKind::Zero => 0.0,
            ProfileKind::Constant(c) => *c,
            ProfileKind::Power { coef, exponent } => coef * rho.powf(*exponent),
            ProfileKind::InverseRho { strength } => strength / rho,
            ProfileKind::Tabulated { samples } => interp_linear(samples, rho),
            ProfileKind::Analytic { f, .. } => f(rho),
        }
    }

    /// Analytic derivative where the family has one (`None` for tabulated
    /// data and analytic profiles registered without a derivative).
    pub fn deriv(&self, rho: f64) -> Option<f64> {
        match &self.kind {
            ProfileKind::Zero => Some(0.0),
            ProfileKind::Constant(_) => Some(0.0),
            ProfileKind::Power { coef, exponent } => {
                Some(coef * exponent * rho.powf(exponent - 1.0))
            }
            ProfileKind::InverseRho { strength } => Some(-strength / (rho * rho)),
            ProfileKind::Tabulated { .. } => None,
            ProfileKind::Analytic { df, .. } => df.as_ref().map(|d| d(rho)),
        }
    }

    pub fn label(&self) -> String {
        match &self.kind {
            ProfileKind::Zero => "zero".to_string(),
            ProfileKind::Constant(c) => format!("constant({c})"),
            ProfileKind::Power { coef, exponent } => format!("power({coef}, {exponent})"),
            ProfileKind::InverseRho { strength } => format!("inverse-rho({strength})"),
            ProfileKind::Tabulated { samples } => format!("tabulated[{}]", samples.len()),
            ProfileKind::Analytic { label, .. } => (*label).to_string(),
        }
    }
}

impl fmt::Debug for RadialProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadialProfile({})", self.label())
    }
}

fn interp_linear(samples: &[(f64, f64)], rho: f64) -> f64 {
    let n = samples.len();
    if rho <= samples[0].0 {
        return samples[0].1;
    }
    if rho >= samples[n - 1].0 {
        return samples[n - 1].1;
    }
    // binary search for the containing segment
    let mut lo = 0;
    let mut hi = n - 1;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if samples[mid].0 <= rho {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (x0, y0) = samples[lo];
    let (x1, y1) = samples[hi];
    y0 + (y1 - y0) * (rho - x0) / (x1 - x0)
}

/// Rotationally invariant body force `f = f_rho(rho) rho_hat + f_theta(rho) theta_hat`.
#[derive(Clone, Debug)]
pub struct Forcing {
    pub f_rho: RadialProfile,
    pub f_theta: RadialProfile,
}

impl Forcing {
    pub fn zero() -> Self {
        Forcing {
            f_rho: RadialProfile::zero(),
            f_theta: RadialProfile::zero(),
        }
    }

    /// Purely azimuthal forcing.
    pub fn azimuthal(f_theta: RadialProfile) -> Self {
        Forcing {
            f_rho: RadialProfile::zero(),
            f_theta,
        }
    }

    /// Purely radial forcing.
    pub fn radial(f_rho: RadialProfile) -> Self {
        Forcing {
            f_rho,
            f_theta: RadialProfile::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.f_rho.is_zero() && self.f_theta.is_zero()
    }
}
