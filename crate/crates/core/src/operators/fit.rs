use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::states::{construct_2d_with_amp, Branch, ClosedFormState, PhysParams};

use super::field::sample_2d;
use super::grid::Grid2D;
use super::hamiltonian::{apply_p_minus_2d, apply_p_plus_2d};

/// Least-squares estimate of the lower amplitude of a planar state.
///
/// A trial state with unit lower amplitude turns the two coupled
/// first-order equations into an overdetermined linear problem for the
/// amplitude `a`: the upper equation reads `a u = v` and the lower one
/// `w = a x`, with all four fields sampled on the grid. The minimizer of
/// the summed squared defects is `(<u,v> + <x,w>) / (|u|^2 + |x|^2)`.
pub fn fit_lower_amp_2d(
    params: &PhysParams,
    k: f64,
    m_ang: u32,
    branch: Branch,
    grid: &Grid2D,
) -> Result<Complex64> {
    let trial = construct_2d_with_amp(*params, k, m_ang, branch, Complex64::new(1.0, 0.0))?;
    let field = sample_2d(&trial, grid)?;
    let e = trial.energy();
    let c = params.c();
    let coupled_to_upper = apply_p_minus_2d(field.comp(1), grid, params);
    let coupled_to_lower = apply_p_plus_2d(field.comp(0), grid, params);
    let n = grid.n();
    let mut dot = Complex64::new(0.0, 0.0);
    let mut gram = 0.0;
    for iy in grid.interior() {
        for ix in grid.interior() {
            let idx = iy * n + ix;
            let u = coupled_to_upper[idx] * c;
            let v = field.comp(0)[idx] * e;
            let w = coupled_to_lower[idx] * c;
            let x = field.comp(1)[idx] * e;
            dot += u.conj() * v + x.conj() * w;
            gram += u.norm_sqr() + x.norm_sqr();
        }
    }
    if !(gram.is_finite() && gram > 0.0) {
        return Err(Error::Verify(
            "fit_lower_amp_2d: degenerate normal equations on this grid".into(),
        ));
    }
    Ok(dot / gram)
}

/// Construct a planar state whose lower amplitude is fitted numerically
/// instead of taken from the closed form. Returns the state together with
/// the fitted amplitude so callers can report how far it landed from the
/// analytic value.
pub fn construct_2d_auto(
    params: &PhysParams,
    k: f64,
    m_ang: u32,
    branch: Branch,
    grid: &Grid2D,
) -> Result<(ClosedFormState, Complex64)> {
    let amp = fit_lower_amp_2d(params, k, m_ang, branch, grid)?;
    let state = construct_2d_with_amp(*params, k, m_ang, branch, amp)?;
    Ok((state, amp))
}
