//! Orchestration: construct the requested state and run every check that
//! applies to it, collecting the outcomes into a [`VerificationReport`].

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::{
    construct_2d_auto, eigen_residual_1d, eigen_residual_2d, jz_residual_2d,
    profile_ode_residual_1d, profile_ode_residual_2d, profile_ode_residual_3d, pt_residual_1d,
    radial_system_residuals_3d, random_envelope_spinor_1d, sample_1d,
    sigma_z_commutator_residual_1d, similarity_residual_1d, Grid1D, Grid2D, RadialGrid,
};
use crate::quadrature::SphereQuadrature;
use crate::spin_algebra::{
    kappa_eigenvalue, kappa_from_casimir, sigma_dot_l, sigma_dot_rhat, AngularMomentum,
    OrbitalBranch, SpinAngle,
};
use crate::states::{
    construct_1d, construct_2d, construct_3d, AmpMode, Branch, ClosedFormState, PhysParams, Spin,
    StateKind, MAX_GAUSS_ARG,
};

use super::dispersion::dispersion_table;
use super::names;
use super::report::{CheckResult, ParamsEcho, VerificationReport};
use super::seeds;
use super::uncertainty::uncertainty_product_1d;

/// Grid sizes and tolerances for one verification run. `Fast` is sized for
/// interactive use, `Strict` for the binding acceptance targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Fast,
    Strict,
}

impl Profile {
    pub fn token(self) -> &'static str {
        match self {
            Profile::Fast => "fast",
            Profile::Strict => "strict",
        }
    }

    pub fn parse_token(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Profile::Fast),
            "strict" => Ok(Profile::Strict),
            other => Err(Error::Params(format!(
                "unknown profile '{other}', expected fast or strict"
            ))),
        }
    }

    fn grid_1d(self) -> usize {
        match self {
            Profile::Fast => 1001,
            Profile::Strict => 4001,
        }
    }

    fn quad_1d(self) -> usize {
        match self {
            Profile::Fast => 2001,
            Profile::Strict => 4001,
        }
    }

    fn grid_2d(self) -> usize {
        match self {
            Profile::Fast => 321,
            Profile::Strict => 1001,
        }
    }

    fn radial_ode(self) -> usize {
        match self {
            Profile::Fast => 1001,
            Profile::Strict => 4001,
        }
    }

    fn radial_quad(self) -> usize {
        match self {
            Profile::Fast => 2001,
            Profile::Strict => 4001,
        }
    }

    fn radial_system(self) -> usize {
        match self {
            Profile::Fast => 1001,
            Profile::Strict => 8001,
        }
    }

    fn uncertainty_nodes(self) -> (usize, usize) {
        match self {
            Profile::Fast => (1025, 1025),
            Profile::Strict => (2049, 2049),
        }
    }
}

/// Amplitude convention for the run. `Unit` takes every amplitude as one,
/// `Exact` solves the coupling for them, `Auto` (planar only) fits the
/// lower amplitude numerically on the verification grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunMode {
    Unit,
    Exact,
    Auto,
}

impl RunMode {
    pub fn token(self) -> &'static str {
        match self {
            RunMode::Unit => "paper",
            RunMode::Exact => "derived",
            RunMode::Auto => "auto",
        }
    }

    pub fn parse_token(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(RunMode::Unit),
            "derived" => Ok(RunMode::Exact),
            "auto" => Ok(RunMode::Auto),
            other => Err(Error::Params(format!(
                "unknown mode '{other}', expected paper, derived, or auto"
            ))),
        }
    }
}

/// Which state to build and verify.
#[derive(Clone, Copy, Debug)]
pub enum StateRequest {
    OneD { k: f64, spin: Spin, branch: Branch },
    TwoD { k: f64, m_ang: u32, branch: Branch },
    ThreeD { k: f64, jm: AngularMomentum, branch: Branch },
}

impl StateRequest {
    pub fn dimension(&self) -> u8 {
        match self {
            StateRequest::OneD { .. } => 1,
            StateRequest::TwoD { .. } => 2,
            StateRequest::ThreeD { .. } => 3,
        }
    }

    fn echo(&self) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        match self {
            StateRequest::OneD { k, spin, branch } => {
                map.insert("k".into(), format!("{k:?}"));
                map.insert("spin".into(), spin.token().into());
                map.insert("branch".into(), branch.token().into());
            }
            StateRequest::TwoD { k, m_ang, branch } => {
                map.insert("k".into(), format!("{k:?}"));
                map.insert("m_ang".into(), m_ang.to_string());
                map.insert("branch".into(), branch.token().into());
            }
            StateRequest::ThreeD { k, jm, branch } => {
                map.insert("k".into(), format!("{k:?}"));
                map.insert("two_j".into(), jm.two_j().to_string());
                map.insert("two_m".into(), jm.two_m().to_string());
                map.insert("branch".into(), branch.token().into());
            }
        }
        map
    }
}

/// Binding tolerance for a named check under a profile. Fast grids are
/// coarser, so every discretization-limited bound is relaxed tenfold.
pub fn tolerance(profile: Profile, name: &str) -> f64 {
    let (fast, strict) = match name {
        names::DISPERSION_IDENTITY | names::SCALED_CONSTANTS => (1e-11, 1e-12),
        names::EIGEN_RESIDUAL_1D | names::EIGEN_RESIDUAL_1D_DERIVED => (1e-7, 1e-8),
        names::ENVELOPE_ODE_1D => (1e-7, 1e-8),
        names::NORMALIZATION_QUADRATURE_1D => (1e-8, 1e-9),
        names::PT_SYMMETRY_1D => (1e-11, 1e-12),
        names::SIMILARITY_TRANSFORM_1D => (1e-5, 1e-6),
        names::SIGMA_Z_COMMUTATOR_1D => (1e-11, 1e-12),
        names::SPIN_PROJECTION_1D => (1e-11, 1e-12),
        names::UNCERTAINTY_PRODUCT_1D => (1e-5, 1e-6),
        names::EIGEN_RESIDUAL_2D | names::EIGEN_RESIDUAL_2D_AUTO => (1e-5, 1e-6),
        names::ANGULAR_MOMENTUM_2D => (1e-5, 1e-6),
        names::RADIAL_ODE_2D => (1e-7, 1e-8),
        names::NORMALIZATION_CLOSED_VS_QUADRATURE_2D => (1e-5, 1e-6),
        names::LOWER_AMPLITUDE_MODULUS_2D => (1e-8, 1e-9),
        names::RADIAL_SYSTEM_3D_UPPER
        | names::RADIAL_SYSTEM_3D_LOWER
        | names::RADIAL_SYSTEM_3D_UPPER_DERIVED
        | names::RADIAL_SYSTEM_3D_LOWER_DERIVED => (1e-7, 1e-8),
        names::RADIAL_ODE_3D_UPPER | names::RADIAL_ODE_3D_LOWER => (1e-7, 1e-8),
        names::NORMALIZATION_CLOSED_VS_QUADRATURE_3D => (1e-5, 1e-6),
        names::KAPPA_CONSISTENCY_3D => (1e-11, 1e-12),
        names::SIGMA_L_POINTWISE_3D => (1e-10, 1e-11),
        names::SIGMA_RHAT_FLIP_3D => (1e-10, 1e-11),
        names::SPIN_ANGLE_ORTHONORMALITY_3D => (1e-10, 1e-11),
        names::AMPLITUDE_RATIO_3D | names::AMPLITUDE_RATIO_3D_DERIVED => (1e-11, 1e-12),
        names::STRETCHED_SPINOR_COEFFICIENTS_3D => (1e-11, 1e-12),
        other => panic!("no tolerance registered for check '{other}'"),
    };
    match profile {
        Profile::Fast => fast,
        Profile::Strict => strict,
    }
}

fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn base_report(
    params: &PhysParams,
    request: &StateRequest,
    mode: RunMode,
    profile: Profile,
    state: &ClosedFormState,
) -> VerificationReport {
    VerificationReport {
        schema: "1".into(),
        dimension: request.dimension(),
        mode: mode.token().into(),
        profile: profile.token().into(),
        params: ParamsEcho {
            hbar: params.hbar(),
            c: params.c(),
            q: params.q(),
            mass: params.mass(),
        },
        request: request.echo(),
        energy: state.energy(),
        norm_constant: state.norm_constant(),
        checks: Vec::new(),
        paper_notes: Vec::new(),
        overall: false,
    }
}

fn push_common_checks(
    state: &ClosedFormState,
    profile: Profile,
    checks: &mut Vec<CheckResult>,
) -> Result<()> {
    let params = state.params();
    let k = state.k();
    let mut ks = vec![0.0, 0.5 * k, k, 1.5 * k, k + 1.0];
    ks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ks.dedup();
    let table = dispersion_table(params, &ks, state.branch())?;
    checks.push(
        CheckResult::new(
            names::DISPERSION_IDENTITY,
            table.worst_defect(),
            tolerance(profile, names::DISPERSION_IDENTITY),
        )
        .with_meta("sampled_wavenumbers", ks.len().to_string()),
    );

    let sc = state.scaled_constants();
    let r_k1 = (sc.k1 - (sc.alpha * sc.alpha + 1.0)).abs() / sc.k1;
    let r_k3 = (sc.k3 - (sc.rho * sc.rho + 2.0)).abs() / sc.k3;
    let r_k4 = (sc.k4 - (sc.gamma * sc.gamma + 3.0)).abs() / sc.k4;
    let r_pair = (sc.k2 * params.hbar() / params.q() - sc.k3).abs() / sc.k3;
    let r_shell = (sc.gamma - sc.alpha).abs() / sc.alpha.max(1.0);
    let residual = r_k1.max(r_k3).max(r_k4).max(r_pair).max(r_shell);
    checks.push(
        CheckResult::new(
            names::SCALED_CONSTANTS,
            residual,
            tolerance(profile, names::SCALED_CONSTANTS),
        )
        .with_meta("alpha", fmt(sc.alpha))
        .with_meta("rho", fmt(sc.rho))
        .with_meta("gamma", fmt(sc.gamma)),
    );
    Ok(())
}

pub fn verify_state(
    params: &PhysParams,
    request: &StateRequest,
    mode: RunMode,
    profile: Profile,
) -> Result<VerificationReport> {
    match *request {
        StateRequest::OneD { k, spin, branch } => {
            verify_1d(params, request, k, spin, branch, mode, profile)
        }
        StateRequest::TwoD { k, m_ang, branch } => {
            verify_2d(params, request, k, m_ang, branch, mode, profile)
        }
        StateRequest::ThreeD { k, jm, branch } => {
            verify_3d(params, request, k, jm, branch, mode, profile)
        }
    }
}

fn amp_mode_for(mode: RunMode) -> Result<AmpMode> {
    match mode {
        RunMode::Unit => Ok(AmpMode::Unit),
        RunMode::Exact => Ok(AmpMode::Exact),
        RunMode::Auto => Err(Error::Params(
            "the auto amplitude fit applies to planar states only".into(),
        )),
    }
}

fn verify_1d(
    params: &PhysParams,
    request: &StateRequest,
    k: f64,
    spin: Spin,
    branch: Branch,
    mode: RunMode,
    profile: Profile,
) -> Result<VerificationReport> {
    let state = construct_1d(*params, k, spin, branch, amp_mode_for(mode)?)?;
    let mut report = base_report(params, request, mode, profile, &state);
    push_common_checks(&state, profile, &mut report.checks)?;

    let grid = Grid1D::covering(params, profile.grid_1d())?;
    let tol = tolerance(profile, names::EIGEN_RESIDUAL_1D);
    let res = eigen_residual_1d(&state, &grid)?;
    let mut eigen = CheckResult::new(names::EIGEN_RESIDUAL_1D, res, tol)
        .with_meta("grid_n", grid.n().to_string())
        .with_meta("grid_h", fmt(grid.h()))
        .with_meta("energy", fmt(state.energy()));
    if mode == RunMode::Unit && !eigen.passed {
        match construct_1d(*params, k, spin, branch, AmpMode::Exact) {
            Ok(exact) => {
                eigen.informative = true;
                report.paper_notes.push(
                    "paper_note: the paper-mode spinor is valid only for m = 0 on its \
                     matching branch; its residual is recorded as informative and the \
                     derived-amplitude counterpart below is binding"
                        .into(),
                );
                report.checks.push(eigen);
                let res = eigen_residual_1d(&exact, &grid)?;
                report.checks.push(
                    CheckResult::new(names::EIGEN_RESIDUAL_1D_DERIVED, res, tol)
                        .with_meta("grid_n", grid.n().to_string())
                        .with_meta("grid_h", fmt(grid.h())),
                );
            }
            Err(e) => {
                report.paper_notes.push(format!(
                    "paper_note: no derived amplitudes exist for these parameters ({e}); \
                     the paper-mode failure stands as binding"
                ));
                report.checks.push(eigen);
            }
        }
    } else {
        report.checks.push(eigen);
    }

    let alpha = state.scaled_constants().alpha;
    let profile_grid = Grid1D::new(MAX_GAUSS_ARG.sqrt(), profile.grid_1d())?;
    report.checks.push(
        CheckResult::new(
            names::ENVELOPE_ODE_1D,
            profile_ode_residual_1d(alpha, &profile_grid),
            tolerance(profile, names::ENVELOPE_ODE_1D),
        )
        .with_meta("alpha", fmt(alpha)),
    );

    let qn = state.quadrature_norm(profile.quad_1d())?;
    report.checks.push(
        CheckResult::new(
            names::NORMALIZATION_QUADRATURE_1D,
            (qn - 1.0).abs(),
            tolerance(profile, names::NORMALIZATION_QUADRATURE_1D),
        )
        .with_meta("quadrature_norm", fmt(qn))
        .with_meta("norm_constant", fmt(state.norm_constant())),
    );
    let reference_n =
        (0.5 * (params.q() / (4.0 * std::f64::consts::PI * params.hbar())).sqrt()).sqrt();
    report.paper_notes.push(format!(
        "paper_note: the reference normalization sqrt(sqrt(q/(4 pi hbar)) / 2) = {} \
         integrates the flat spinor to exactly 1/2; the constant used here is sqrt(2) \
         larger and the quadrature check above adjudicates it",
        fmt(reference_n)
    ));

    let decay = 2.0 * params.q() / params.hbar();
    let pt_field = random_envelope_spinor_1d(&grid, decay, seeds::PT);
    report.checks.push(
        CheckResult::new(
            names::PT_SYMMETRY_1D,
            pt_residual_1d(params, &pt_field, &grid),
            tolerance(profile, names::PT_SYMMETRY_1D),
        )
        .with_meta("seed", seeds::PT.to_string()),
    );

    let sim_field = random_envelope_spinor_1d(&grid, decay, seeds::SIMILARITY);
    report.checks.push(
        CheckResult::new(
            names::SIMILARITY_TRANSFORM_1D,
            similarity_residual_1d(params, &sim_field, &grid),
            tolerance(profile, names::SIMILARITY_TRANSFORM_1D),
        )
        .with_meta("seed", seeds::SIMILARITY.to_string()),
    );

    let comm_field = random_envelope_spinor_1d(&grid, decay, seeds::COMMUTATOR);
    report.checks.push(
        CheckResult::new(
            names::SIGMA_Z_COMMUTATOR_1D,
            sigma_z_commutator_residual_1d(params, &comm_field, &grid),
            tolerance(profile, names::SIGMA_Z_COMMUTATOR_1D),
        )
        .with_meta("seed", seeds::COMMUTATOR.to_string()),
    );

    let field = sample_1d(&state, &grid)?;
    let expected = spin.sign();
    let mut num = 0.0;
    let mut den = 0.0;
    for (c, sigma) in [1.0_f64, -1.0, 1.0, -1.0].into_iter().enumerate() {
        let defect = (sigma - expected) * (sigma - expected);
        for value in field.comp(c) {
            num += value.norm_sqr() * defect;
            den += value.norm_sqr();
        }
    }
    report.checks.push(CheckResult::new(
        names::SPIN_PROJECTION_1D,
        (num / den).sqrt(),
        tolerance(profile, names::SPIN_PROJECTION_1D),
    ));

    let (nz, np) = profile.uncertainty_nodes();
    let u = uncertainty_product_1d(&state, nz, np)?;
    report.checks.push(
        CheckResult::new(
            names::UNCERTAINTY_PRODUCT_1D,
            (u.product - u.target).abs() / u.target,
            tolerance(profile, names::UNCERTAINTY_PRODUCT_1D),
        )
        .with_meta("delta_z", fmt(u.delta_z))
        .with_meta("delta_p", fmt(u.delta_p))
        .with_meta("mean_momentum", fmt(u.mean_p))
        .with_meta("parseval_defect", fmt(u.parseval_defect)),
    );

    report.recompute_overall();
    Ok(report)
}

fn verify_2d(
    params: &PhysParams,
    request: &StateRequest,
    k: f64,
    m_ang: u32,
    branch: Branch,
    mode: RunMode,
    profile: Profile,
) -> Result<VerificationReport> {
    let grid = Grid2D::covering(params, profile.grid_2d())?;
    let (state, fitted_amp) = match mode {
        RunMode::Unit => (construct_2d(*params, k, m_ang, branch, AmpMode::Unit)?, None),
        RunMode::Exact => (construct_2d(*params, k, m_ang, branch, AmpMode::Exact)?, None),
        RunMode::Auto => {
            let (state, amp) = construct_2d_auto(params, k, m_ang, branch, &grid)?;
            (state, Some(amp))
        }
    };
    let mut report = base_report(params, request, mode, profile, &state);
    push_common_checks(&state, profile, &mut report.checks)?;

    let eigen_name = match mode {
        RunMode::Auto => names::EIGEN_RESIDUAL_2D_AUTO,
        _ => names::EIGEN_RESIDUAL_2D,
    };
    let tol = tolerance(profile, eigen_name);
    let res = eigen_residual_2d(&state, &grid)?;
    let mut eigen = CheckResult::new(eigen_name, res, tol)
        .with_meta("grid_n_per_side", grid.n().to_string())
        .with_meta("grid_h", fmt(grid.h()));
    if let Some(amp) = fitted_amp {
        eigen = eigen
            .with_meta("fitted_amp_re", fmt(amp.re))
            .with_meta("fitted_amp_im", fmt(amp.im));
    }
    if mode == RunMode::Unit && !eigen.passed {
        eigen.informative = true;
        report.paper_notes.push(
            "paper_note: the paper-mode lower amplitude is not an eigenvector of the \
             planar problem; its residual is recorded as informative and the \
             fitted-amplitude counterpart below is binding"
                .into(),
        );
        report.checks.push(eigen);
        let (fitted_state, amp) = construct_2d_auto(params, k, m_ang, branch, &grid)?;
        let res = eigen_residual_2d(&fitted_state, &grid)?;
        report.checks.push(
            CheckResult::new(names::EIGEN_RESIDUAL_2D_AUTO, res, tol)
                .with_meta("grid_n_per_side", grid.n().to_string())
                .with_meta("fitted_amp_re", fmt(amp.re))
                .with_meta("fitted_amp_im", fmt(amp.im)),
        );
    } else {
        report.checks.push(eigen);
    }

    report.checks.push(
        CheckResult::new(
            names::ANGULAR_MOMENTUM_2D,
            jz_residual_2d(&state, &grid)?,
            tolerance(profile, names::ANGULAR_MOMENTUM_2D),
        )
        .with_meta("eigenvalue", fmt(params.hbar() * (f64::from(m_ang) + 0.5))),
    );

    let alpha = state.scaled_constants().alpha;
    let radial = RadialGrid::new(MAX_GAUSS_ARG.sqrt(), profile.radial_ode())?;
    report.checks.push(
        CheckResult::new(
            names::RADIAL_ODE_2D,
            profile_ode_residual_2d(m_ang, alpha, &radial)?,
            tolerance(profile, names::RADIAL_ODE_2D),
        )
        .with_meta("alpha", fmt(alpha)),
    );

    let qn = state.quadrature_norm(profile.radial_quad())?;
    report.checks.push(
        CheckResult::new(
            names::NORMALIZATION_CLOSED_VS_QUADRATURE_2D,
            (qn - 1.0).abs(),
            tolerance(profile, names::NORMALIZATION_CLOSED_VS_QUADRATURE_2D),
        )
        .with_meta("quadrature_norm", fmt(qn))
        .with_meta("norm_constant", fmt(state.norm_constant())),
    );

    let StateKind::TwoD { lower_amp, .. } = *state.kind() else {
        unreachable!("planar constructor returned a non-planar state");
    };
    report.checks.push(
        CheckResult::new(
            names::LOWER_AMPLITUDE_MODULUS_2D,
            (lower_amp.norm() - 1.0).abs(),
            tolerance(profile, names::LOWER_AMPLITUDE_MODULUS_2D),
        )
        .with_meta("amp_re", fmt(lower_amp.re))
        .with_meta("amp_im", fmt(lower_amp.im)),
    );

    report.recompute_overall();
    Ok(report)
}

fn spin_angle_pair(jm: AngularMomentum) -> Result<(SpinAngle, SpinAngle)> {
    Ok((SpinAngle::new(jm, OrbitalBranch::Lower)?, SpinAngle::new(jm, OrbitalBranch::Upper)?))
}

fn verify_3d(
    params: &PhysParams,
    request: &StateRequest,
    k: f64,
    jm: AngularMomentum,
    branch: Branch,
    mode: RunMode,
    profile: Profile,
) -> Result<VerificationReport> {
    let state = construct_3d(*params, k, jm, branch, amp_mode_for(mode)?)?;
    let mut report = base_report(params, request, mode, profile, &state);
    push_common_checks(&state, profile, &mut report.checks)?;
    report.paper_notes.push(
        "paper_note: the reference first-order block pair carries (E - mc^2) on both \
         right-hand sides; the pair only closes into the dispersion relation with \
         (E + mc^2) in the second, and the radial checks verify that consistent form"
            .into(),
    );

    let StateKind::ThreeD { amp_upper, amp_lower, .. } = *state.kind() else {
        unreachable!("spherical constructor returned a non-spherical state");
    };
    let exact_state = if mode == RunMode::Unit {
        construct_3d(*params, k, jm, branch, AmpMode::Exact).ok()
    } else {
        None
    };
    let mut downgraded = false;

    let rgrid = RadialGrid::covering(params, profile.radial_system())?;
    let (res_lower, res_upper) = radial_system_residuals_3d(&state, &rgrid)?;
    let tol_sys = tolerance(profile, names::RADIAL_SYSTEM_3D_LOWER);
    let mut lower = CheckResult::new(names::RADIAL_SYSTEM_3D_LOWER, res_lower, tol_sys)
        .with_meta("grid_n", rgrid.n().to_string())
        .with_meta("grid_h", fmt(rgrid.h()));
    let mut upper = CheckResult::new(names::RADIAL_SYSTEM_3D_UPPER, res_upper, tol_sys)
        .with_meta("grid_n", rgrid.n().to_string())
        .with_meta("grid_h", fmt(rgrid.h()));
    if let Some(exact) = &exact_state {
        if !lower.passed || !upper.passed {
            downgraded = true;
            lower.informative = !lower.passed;
            upper.informative = !upper.passed;
            let (res_lower, res_upper) = radial_system_residuals_3d(exact, &rgrid)?;
            report.checks.push(lower);
            report.checks.push(upper);
            report.checks.push(
                CheckResult::new(names::RADIAL_SYSTEM_3D_LOWER_DERIVED, res_lower, tol_sys)
                    .with_meta("grid_n", rgrid.n().to_string()),
            );
            report.checks.push(
                CheckResult::new(names::RADIAL_SYSTEM_3D_UPPER_DERIVED, res_upper, tol_sys)
                    .with_meta("grid_n", rgrid.n().to_string()),
            );
        } else {
            report.checks.push(lower);
            report.checks.push(upper);
        }
    } else {
        report.checks.push(lower);
        report.checks.push(upper);
    }

    let alpha = state.scaled_constants().alpha;
    let lambda = jm.lambda();
    let ode_grid = RadialGrid::new(MAX_GAUSS_ARG.sqrt(), profile.radial_ode())?;
    report.checks.push(
        CheckResult::new(
            names::RADIAL_ODE_3D_UPPER,
            profile_ode_residual_3d(lambda - 1, alpha, &ode_grid)?,
            tolerance(profile, names::RADIAL_ODE_3D_UPPER),
        )
        .with_meta("order", (lambda - 1).to_string()),
    );
    report.checks.push(
        CheckResult::new(
            names::RADIAL_ODE_3D_LOWER,
            profile_ode_residual_3d(lambda, alpha, &ode_grid)?,
            tolerance(profile, names::RADIAL_ODE_3D_LOWER),
        )
        .with_meta("order", lambda.to_string()),
    );

    let qn = state.quadrature_norm(profile.radial_quad())?;
    report.checks.push(
        CheckResult::new(
            names::NORMALIZATION_CLOSED_VS_QUADRATURE_3D,
            (qn - 1.0).abs(),
            tolerance(profile, names::NORMALIZATION_CLOSED_VS_QUADRATURE_3D),
        )
        .with_meta("quadrature_norm", fmt(qn))
        .with_meta("norm_constant", fmt(state.norm_constant())),
    );

    let kappa_lower = kappa_eigenvalue(OrbitalBranch::Lower, jm.two_j());
    let kappa_upper = kappa_eigenvalue(OrbitalBranch::Upper, jm.two_j());
    let kappa_residual = (kappa_lower - kappa_from_casimir(jm.two_j(), lambda - 1))
        .abs()
        .max((kappa_upper - kappa_from_casimir(jm.two_j(), lambda)).abs());
    report.checks.push(
        CheckResult::new(
            names::KAPPA_CONSISTENCY_3D,
            kappa_residual,
            tolerance(profile, names::KAPPA_CONSISTENCY_3D),
        )
        .with_meta("kappa_lower_orbital", fmt(kappa_lower))
        .with_meta("kappa_upper_orbital", fmt(kappa_upper)),
    );

    let (chi_lower, chi_upper) = spin_angle_pair(jm)?;
    let thetas = [0.4, 1.1, 1.9, 2.6];
    let phis = [0.0, 0.9, 2.2, 3.8, 5.1];
    let mut worst = 0.0_f64;
    let mut scale = 0.0_f64;
    for (chi, kappa) in [(&chi_lower, kappa_lower), (&chi_upper, kappa_upper)] {
        let expansion = sigma_dot_l(&chi.expansion(), params.hbar());
        for &theta in &thetas {
            for &phi in &phis {
                let acted = expansion.eval(theta, phi)?;
                let base = chi.eval(theta, phi)?;
                for (a, b) in acted.iter().zip(&base) {
                    worst = worst.max((*a - *b * (params.hbar() * kappa)).norm());
                    scale = scale.max(b.norm() * params.hbar() * kappa.abs().max(1.0));
                }
            }
        }
    }
    report.checks.push(CheckResult::new(
        names::SIGMA_L_POINTWISE_3D,
        worst / scale.max(f64::MIN_POSITIVE),
        tolerance(profile, names::SIGMA_L_POINTWISE_3D),
    ));

    let lmax = lambda;
    let sphere = SphereQuadrature::new(lmax as usize + 6, 2 * lmax as usize + 8)?;
    let flip_defect = sphere
        .integrate(|theta, phi| {
            let matrix = sigma_dot_rhat(theta, phi);
            let lower_vals = chi_lower.eval(theta, phi).expect("valid angles");
            let upper_vals = chi_upper.eval(theta, phi).expect("valid angles");
            let acted = matrix.apply(lower_vals);
            let d0 = acted[0] + upper_vals[0];
            let d1 = acted[1] + upper_vals[1];
            Complex64::new(d0.norm_sqr() + d1.norm_sqr(), 0.0)
        })
        .re;
    report.checks.push(CheckResult::new(
        names::SIGMA_RHAT_FLIP_3D,
        flip_defect.max(0.0).sqrt(),
        tolerance(profile, names::SIGMA_RHAT_FLIP_3D),
    ));

    let gram = |a: &SpinAngle, b: &SpinAngle| -> Complex64 {
        sphere.integrate(|theta, phi| {
            let av = a.eval(theta, phi).expect("valid angles");
            let bv = b.eval(theta, phi).expect("valid angles");
            av[0].conj() * bv[0] + av[1].conj() * bv[1]
        })
    };
    let ortho_residual = (gram(&chi_lower, &chi_lower) - 1.0)
        .norm()
        .max((gram(&chi_upper, &chi_upper) - 1.0).norm())
        .max(gram(&chi_lower, &chi_upper).norm());
    report.checks.push(CheckResult::new(
        names::SPIN_ANGLE_ORTHONORMALITY_3D,
        ortho_residual,
        tolerance(profile, names::SPIN_ANGLE_ORTHONORMALITY_3D),
    ));

    let mc2 = params.mass() * params.c() * params.c();
    let kinetic = params.hbar() * k * params.c();
    let ratio_defect = |a: f64, b: f64| -> f64 {
        let lhs = b * (state.energy() + mc2);
        let rhs = a * kinetic;
        let scale = lhs
            .abs()
            .max(rhs.abs())
            .max(params.energy_scale() * (a.abs() + b.abs()));
        (lhs - rhs).abs() / scale
    };
    let tol_ratio = tolerance(profile, names::AMPLITUDE_RATIO_3D);
    let mut ratio = CheckResult::new(
        names::AMPLITUDE_RATIO_3D,
        ratio_defect(amp_upper, amp_lower),
        tol_ratio,
    )
    .with_meta("amp_upper", fmt(amp_upper))
    .with_meta("amp_lower", fmt(amp_lower));
    if let Some(exact) = &exact_state {
        if !ratio.passed {
            downgraded = true;
            ratio.informative = true;
            report.checks.push(ratio);
            let StateKind::ThreeD { amp_upper: a, amp_lower: b, .. } = *exact.kind() else {
                unreachable!("spherical constructor returned a non-spherical state");
            };
            report.checks.push(
                CheckResult::new(names::AMPLITUDE_RATIO_3D_DERIVED, ratio_defect(a, b), tol_ratio)
                    .with_meta("amp_upper", fmt(a))
                    .with_meta("amp_lower", fmt(b)),
            );
        } else {
            report.checks.push(ratio);
        }
    } else {
        report.checks.push(ratio);
    }

    if jm.two_m() == jm.two_j() as i32 {
        // at maximal projection the lower-orbital spinor collapses to a
        // single harmonic and the upper-orbital coefficients close over
        // 2j + 2; frozen forms independent of the general construction
        let two_j = f64::from(jm.two_j());
        let expected_lower = (1.0, 0.0);
        let expected_upper =
            (-(2.0 / (2.0 * (two_j + 2.0))).sqrt(), ((2.0 * two_j + 2.0) / (2.0 * (two_j + 2.0))).sqrt());
        let residual = (chi_lower.coeff_up() - expected_lower.0)
            .abs()
            .max((chi_lower.coeff_dn() - expected_lower.1).abs())
            .max((chi_upper.coeff_up() - expected_upper.0).abs())
            .max((chi_upper.coeff_dn() - expected_upper.1).abs());
        report.checks.push(
            CheckResult::new(
                names::STRETCHED_SPINOR_COEFFICIENTS_3D,
                residual,
                tolerance(profile, names::STRETCHED_SPINOR_COEFFICIENTS_3D),
            )
            .with_meta("two_j", jm.two_j().to_string()),
        );
    }

    if downgraded {
        report.paper_notes.push(
            "paper_note: the paper-mode unit amplitudes do not satisfy the coupled \
             radial system for these parameters; the affected checks are informative \
             and their derived-amplitude counterparts are binding"
                .into(),
        );
    }
    if mode == RunMode::Unit && exact_state.is_none() && (!report.checks.iter().all(|c| c.passed))
    {
        report.paper_notes.push(
            "paper_note: no derived amplitudes exist for these parameters; paper-mode \
             failures stand as binding"
                .into(),
        );
    }

    report.recompute_overall();
    Ok(report)
}
