//! Finite-difference momentum and divergence residuals in polar coordinates.
//!
//! Fields are evaluated analytically at the grid nodes and all derivatives
//! are taken by second-order differences: centered at interior nodes,
//! one-sided (still second order) at the angular ends of cut grids.
//! Multivalued pressures are never differenced; their analytic gradient is
//! mandatory.

use super::{PolarGrid, ThetaTopology};
use crate::solutions::{FlowField, Forcing};
use crate::{Error, Result};

/// Norms of the assembled residuals. Momentum and divergence are measured at
/// interior radial rows; the boundary error compares velocity traces with the
/// catalog boundary data (720 samples per circle).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    pub momentum_linf: f64,
    pub momentum_l2: f64,
    pub divergence_linf: f64,
    pub divergence_l2: f64,
    pub boundary_linf: f64,
    pub n_rho: usize,
    pub n_theta: usize,
}

/// Navier-Stokes residual `-lap u + (u.grad)u + grad p - f` plus divergence.
pub fn ns_residual(
    field: &FlowField,
    forcing: Option<&Forcing>,
    grid: &PolarGrid,
) -> Result<ResidualReport> {
    assemble(field, forcing, grid, true)
}

/// Stokes residual `-lap u + grad p` plus divergence (no convection, no force).
pub fn stokes_residual(field: &FlowField, grid: &PolarGrid) -> Result<ResidualReport> {
    assemble(field, None, grid, false)
}

struct NodeArrays {
    u_rho: Vec<f64>,
    u_theta: Vec<f64>,
    rho_u_rho: Vec<f64>,
    pressure: Vec<f64>,
    grad_p: Option<Vec<(f64, f64)>>,
}

fn assemble(
    field: &FlowField,
    forcing: Option<&Forcing>,
    grid: &PolarGrid,
    convection: bool,
) -> Result<ResidualReport> {
    if field.multivalued_pressure() {
        match grid.topology() {
            ThetaTopology::Cut { .. } => {}
            ThetaTopology::Periodic => {
                return Err(Error::Unsupported(
                    "multivalued pressure requires a cut grid".to_string(),
                ))
            }
        }
        if !field.has_pressure_gradient() {
            return Err(Error::Unsupported(
                "multivalued pressure requires an analytic pressure gradient".to_string(),
            ));
        }
    }
    let (nr, nt) = (grid.n_rho(), grid.n_theta());
    if !field.domain().contains(grid.rho_range().lo())
        || !field.domain().contains(grid.rho_range().hi())
    {
        return Err(Error::Domain(format!(
            "grid range [{}, {}] not inside the field domain",
            grid.rho_range().lo(),
            grid.rho_range().hi()
        )));
    }

    let idx = |i: usize, j: usize| i * nt + j;
    let mut arr = NodeArrays {
        u_rho: vec![0.0; nr * nt],
        u_theta: vec![0.0; nr * nt],
        rho_u_rho: vec![0.0; nr * nt],
        pressure: vec![0.0; nr * nt],
        grad_p: if field.multivalued_pressure() {
            Some(vec![(0.0, 0.0); nr * nt])
        } else {
            None
        },
    };
    for i in 0..nr {
        let rho = grid.rho_node(i);
        for j in 0..nt {
            let theta = grid.theta_node(j);
            let (ur, ut) = field.velocity(rho, theta)?;
            let k = idx(i, j);
            arr.u_rho[k] = ur;
            arr.u_theta[k] = ut;
            arr.rho_u_rho[k] = rho * ur;
            if let Some(gp) = arr.grad_p.as_mut() {
                gp[k] = field
                    .pressure_gradient(rho, theta)
                    .expect("checked above: analytic gradient present");
            } else {
                arr.pressure[k] = field.pressure(rho, theta)?;
            }
        }
    }

    let h = grid.rho_spacing();
    let k_t = grid.theta_spacing();
    let periodic = matches!(grid.topology(), ThetaTopology::Periodic);

    // first/second angular derivative of a row-slice, one-sided at cut ends
    let d_theta = |v: &[f64], i: usize, j: usize| -> f64 {
        if periodic {
            let jm = (j + nt - 1) % nt;
            let jp = (j + 1) % nt;
            (v[idx(i, jp)] - v[idx(i, jm)]) / (2.0 * k_t)
        } else if j == 0 {
            (-3.0 * v[idx(i, 0)] + 4.0 * v[idx(i, 1)] - v[idx(i, 2)]) / (2.0 * k_t)
        } else if j == nt - 1 {
            (3.0 * v[idx(i, nt - 1)] - 4.0 * v[idx(i, nt - 2)] + v[idx(i, nt - 3)]) / (2.0 * k_t)
        } else {
            (v[idx(i, j + 1)] - v[idx(i, j - 1)]) / (2.0 * k_t)
        }
    };
    let dd_theta = |v: &[f64], i: usize, j: usize| -> f64 {
        if periodic {
            let jm = (j + nt - 1) % nt;
            let jp = (j + 1) % nt;
            (v[idx(i, jp)] - 2.0 * v[idx(i, j)] + v[idx(i, jm)]) / (k_t * k_t)
        } else if j == 0 {
            (2.0 * v[idx(i, 0)] - 5.0 * v[idx(i, 1)] + 4.0 * v[idx(i, 2)] - v[idx(i, 3)])
                / (k_t * k_t)
        } else if j == nt - 1 {
            (2.0 * v[idx(i, nt - 1)] - 5.0 * v[idx(i, nt - 2)] + 4.0 * v[idx(i, nt - 3)]
                - v[idx(i, nt - 4)])
                / (k_t * k_t)
        } else {
            (v[idx(i, j + 1)] - 2.0 * v[idx(i, j)] + v[idx(i, j - 1)]) / (k_t * k_t)
        }
    };
    let d_rho = |v: &[f64], i: usize, j: usize| (v[idx(i + 1, j)] - v[idx(i - 1, j)]) / (2.0 * h);
    let dd_rho = |v: &[f64], i: usize, j: usize| {
        (v[idx(i + 1, j)] - 2.0 * v[idx(i, j)] + v[idx(i - 1, j)]) / (h * h)
    };

    let mut momentum_linf = 0.0_f64;
    let mut momentum_l2 = 0.0_f64;
    let mut divergence_linf = 0.0_f64;
    let mut divergence_l2 = 0.0_f64;

    for i in 1..nr - 1 {
        let rho = grid.rho_node(i);
        for j in 0..nt {
            let k = idx(i, j);
            let ur = arr.u_rho[k];
            let ut = arr.u_theta[k];

            let ur_r = d_rho(&arr.u_rho, i, j);
            let ur_rr = dd_rho(&arr.u_rho, i, j);
            let ur_t = d_theta(&arr.u_rho, i, j);
            let ur_tt = dd_theta(&arr.u_rho, i, j);
            let ut_r = d_rho(&arr.u_theta, i, j);
            let ut_rr = dd_rho(&arr.u_theta, i, j);
            let ut_t = d_theta(&arr.u_theta, i, j);
            let ut_tt = dd_theta(&arr.u_theta, i, j);

            let rho2 = rho * rho;
            // polar vector Laplacian
            let lap_r = ur_rr + ur_r / rho + ur_tt / rho2 - ur / rho2 - 2.0 / rho2 * ut_t;
            let lap_t = ut_rr + ut_r / rho + ut_tt / rho2 - ut / rho2 + 2.0 / rho2 * ur_t;

            let (gp_r, gp_t) = match arr.grad_p.as_ref() {
                Some(gp) => gp[k],
                None => (
                    d_rho(&arr.pressure, i, j),
                    d_theta(&arr.pressure, i, j) / rho,
                ),
            };

            let (conv_r, conv_t) = if convection {
                (
                    ur * ur_r + ut / rho * ur_t - ut * ut / rho,
                    ur * ut_r + ut / rho * ut_t + ur * ut / rho,
                )
            } else {
                (0.0, 0.0)
            };

            let (f_r, f_t) = match forcing {
                Some(f) => (f.f_rho.eval(rho), f.f_theta.eval(rho)),
                None => (0.0, 0.0),
            };

            let res_r = -lap_r + conv_r + gp_r - f_r;
            let res_t = -lap_t + conv_t + gp_t - f_t;
            let div = d_rho(&arr.rho_u_rho, i, j) / rho + d_theta(&arr.u_theta, i, j) / rho;

            momentum_linf = momentum_linf.max(res_r.abs()).max(res_t.abs());
            momentum_l2 += (res_r * res_r + res_t * res_t) * rho * h * k_t;
            divergence_linf = divergence_linf.max(div.abs());
            divergence_l2 += div * div * rho * h * k_t;
        }
    }

    let boundary_linf = super::checks::boundary_check(field).unwrap_or(f64::NAN);

    Ok(ResidualReport {
        momentum_linf,
        momentum_l2: momentum_l2.sqrt(),
        divergence_linf,
        divergence_l2: divergence_l2.sqrt(),
        boundary_linf,
        n_rho: nr,
        n_theta: nt,
    })
}
