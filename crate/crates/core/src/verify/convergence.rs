//! Grid refinement studies: rerun a residual at several resolutions and
//! fit the observed order of accuracy, or confirm that an identity which
//! should not see the grid at all really does not.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::{
    eigen_residual_1d, eigen_residual_2d, profile_ode_residual_1d, pt_residual_1d,
    random_envelope_spinor_1d, sigma_z_commutator_residual_1d, similarity_residual_1d, Grid1D,
    Grid2D,
};
use crate::states::{ClosedFormState, MAX_GAUSS_ARG};

use super::seeds;

/// Residuals below this are dominated by rounding noise, not truncation,
/// and carry no information about the discretization order.
pub const ROUNDING_FLOOR: f64 = 1e-13;

/// What a residual is allowed to depend on: the stencil (so refinement
/// must shrink it) or nothing but the arithmetic (so it must sit at the
/// rounding floor on every grid).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualClass {
    FdLimited,
    AlgebraicallyExact,
}

/// The refinable checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdCheck {
    EigenResidual1D,
    EnvelopeOde1D,
    SimilarityTransform1D,
    PtSymmetry1D,
    SigmaZCommutator1D,
    EigenResidual2D,
}

impl FdCheck {
    pub fn class(self) -> ResidualClass {
        match self {
            FdCheck::PtSymmetry1D | FdCheck::SigmaZCommutator1D => {
                ResidualClass::AlgebraicallyExact
            }
            _ => ResidualClass::FdLimited,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FdCheck::EigenResidual1D => super::names::EIGEN_RESIDUAL_1D,
            FdCheck::EnvelopeOde1D => super::names::ENVELOPE_ODE_1D,
            FdCheck::SimilarityTransform1D => super::names::SIMILARITY_TRANSFORM_1D,
            FdCheck::PtSymmetry1D => super::names::PT_SYMMETRY_1D,
            FdCheck::SigmaZCommutator1D => super::names::SIGMA_Z_COMMUTATOR_1D,
            FdCheck::EigenResidual2D => super::names::EIGEN_RESIDUAL_2D,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ConvergencePoint {
    pub n: usize,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ConvergenceOutcome {
    /// Least-squares slope of log(residual) against log(n), negated.
    Fitted { order: f64, points: Vec<ConvergencePoint> },
    /// An algebraically exact identity that stayed at the rounding floor.
    Exact { points: Vec<ConvergencePoint> },
    /// A stencil-limited residual already at the floor on every grid;
    /// nothing left to refine.
    AllAtRoundingFloor { points: Vec<ConvergencePoint> },
}

/// Run `residual_at` over the grid sizes and classify the outcome.
pub fn convergence_study(
    mut residual_at: impl FnMut(usize) -> Result<f64>,
    class: ResidualClass,
    sizes: &[usize],
) -> Result<ConvergenceOutcome> {
    if sizes.len() < 3 {
        return Err(Error::Verify(
            "a convergence study needs at least three grid sizes".into(),
        ));
    }
    let mut points = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let residual = residual_at(n)?;
        if !residual.is_finite() {
            return Err(Error::Verify(format!(
                "residual at n = {n} is not finite"
            )));
        }
        points.push(ConvergencePoint { n, residual });
    }

    match class {
        ResidualClass::AlgebraicallyExact => {
            if let Some(p) = points.iter().find(|p| p.residual > ROUNDING_FLOOR) {
                return Err(Error::Verify(format!(
                    "identity expected at the rounding floor measured {:.3e} at n = {}",
                    p.residual, p.n
                )));
            }
            Ok(ConvergenceOutcome::Exact { points })
        }
        ResidualClass::FdLimited => {
            let usable: Vec<&ConvergencePoint> =
                points.iter().filter(|p| p.residual > ROUNDING_FLOOR).collect();
            if usable.is_empty() {
                return Ok(ConvergenceOutcome::AllAtRoundingFloor { points });
            }
            if usable.len() < 3 {
                return Err(Error::Verify(format!(
                    "only {} of {} residuals sit above the rounding floor; \
                     not enough to fit an order",
                    usable.len(),
                    points.len()
                )));
            }
            let xs: Vec<f64> = usable.iter().map(|p| (p.n as f64).ln()).collect();
            let ys: Vec<f64> = usable.iter().map(|p| p.residual.ln()).collect();
            let xbar = xs.iter().sum::<f64>() / xs.len() as f64;
            let ybar = ys.iter().sum::<f64>() / ys.len() as f64;
            let mut num = 0.0;
            let mut den = 0.0;
            for (x, y) in xs.iter().zip(&ys) {
                num += (x - xbar) * (y - ybar);
                den += (x - xbar) * (x - xbar);
            }
            if den == 0.0 {
                return Err(Error::Verify(
                    "convergence sizes are degenerate; cannot fit an order".into(),
                ));
            }
            Ok(ConvergenceOutcome::Fitted { order: -num / den, points })
        }
    }
}

/// Refinement study of one named check applied to a constructed state.
pub fn convergence_for_state(
    state: &ClosedFormState,
    check: FdCheck,
    sizes: &[usize],
) -> Result<ConvergenceOutcome> {
    let params = *state.params();
    let expect_dim = match check {
        FdCheck::EigenResidual2D => 2,
        _ => 1,
    };
    if state.dimension() != expect_dim {
        return Err(Error::Params(format!(
            "check {} applies to {expect_dim}-dimensional states, got {}",
            check.name(),
            state.dimension()
        )));
    }
    let alpha = state.scaled_constants().alpha;
    let decay = 2.0 * params.q() / params.hbar();
    convergence_study(
        move |n| match check {
            FdCheck::EigenResidual1D => {
                eigen_residual_1d(state, &Grid1D::covering(&params, n)?)
            }
            FdCheck::EnvelopeOde1D => {
                Ok(profile_ode_residual_1d(alpha, &Grid1D::new(MAX_GAUSS_ARG.sqrt(), n)?))
            }
            FdCheck::SimilarityTransform1D => {
                let grid = Grid1D::covering(&params, n)?;
                let field = random_envelope_spinor_1d(&grid, decay, seeds::SIMILARITY);
                Ok(similarity_residual_1d(&params, &field, &grid))
            }
            FdCheck::PtSymmetry1D => {
                let grid = Grid1D::covering(&params, n)?;
                let field = random_envelope_spinor_1d(&grid, decay, seeds::PT);
                Ok(pt_residual_1d(&params, &field, &grid))
            }
            FdCheck::SigmaZCommutator1D => {
                let grid = Grid1D::covering(&params, n)?;
                let field = random_envelope_spinor_1d(&grid, decay, seeds::COMMUTATOR);
                Ok(sigma_z_commutator_residual_1d(&params, &field, &grid))
            }
            FdCheck::EigenResidual2D => {
                eigen_residual_2d(state, &Grid2D::covering(&params, n)?)
            }
        },
        check.class(),
        sizes,
    )
}
