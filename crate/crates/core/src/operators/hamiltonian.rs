//! Discretized Hamiltonian applications and relative residuals.
//!
//! Every residual is relative: the defect norm divided by the norm of the
//! term the equation equates it to. When that reference term vanishes
//! identically (zero energy, zero coupled component) the denominator falls
//! back to the field norm times the appropriate inverse scale, so a zero
//! residual still means "equation satisfied" and not "0/0".

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::states::{
    scalar_factor_1d, scalar_factor_2d, scalar_factor_3d, ClosedFormState, PhysParams, StateKind,
};

use super::fd;
use super::field::{sample_1d, sample_2d, SpinorField1D, SpinorField2D};
use super::grid::{Grid1D, Grid2D, RadialGrid};

const MINUS_I: Complex64 = Complex64::new(0.0, -1.0);

/// (p - i q_eff z) applied to one component: -i (hbar f' + q_eff z f).
fn packed_momentum_1d(
    comp: &[Complex64],
    grid: &Grid1D,
    hbar: f64,
    q_eff: f64,
    out: &mut [Complex64],
) {
    let h = grid.h();
    for i in grid.interior() {
        let d = fd::d1(comp, i, 1, h);
        out[i] = MINUS_I * (d * hbar + comp[i] * (q_eff * grid.node(i)));
    }
}

fn apply_h_1d_with_coupling(
    params: &PhysParams,
    field: &SpinorField1D,
    grid: &Grid1D,
    q_eff: f64,
) -> SpinorField1D {
    let n = grid.n();
    assert_eq!(field.n(), n, "field sampled on a different grid");
    let c = params.c();
    let mc2 = params.mass() * c * c;
    let mut packed = SpinorField1D::zeros(n);
    for comp in 0..4 {
        packed_momentum_1d(field.comp(comp), grid, params.hbar(), q_eff, packed.comp_mut(comp));
    }
    let mut out = SpinorField1D::zeros(n);
    for i in grid.interior() {
        let w = [packed.comp(0)[i], packed.comp(1)[i], packed.comp(2)[i], packed.comp(3)[i]];
        let f = [field.comp(0)[i], field.comp(1)[i], field.comp(2)[i], field.comp(3)[i]];
        out.comp_mut(0)[i] = w[2] * c + f[0] * mc2;
        out.comp_mut(1)[i] = w[3] * -c + f[1] * mc2;
        out.comp_mut(2)[i] = w[0] * c - f[2] * mc2;
        out.comp_mut(3)[i] = w[1] * -c - f[3] * mc2;
    }
    out
}

/// Hamiltonian with the imaginary gauge term, interior nodes only.
pub fn apply_h_1d(params: &PhysParams, field: &SpinorField1D, grid: &Grid1D) -> SpinorField1D {
    apply_h_1d_with_coupling(params, field, grid, params.q())
}

/// The plain Dirac Hamiltonian (no gauge term), for the similarity check.
pub fn apply_h_free_1d(
    params: &PhysParams,
    field: &SpinorField1D,
    grid: &Grid1D,
) -> SpinorField1D {
    apply_h_1d_with_coupling(params, field, grid, 0.0)
}

/// Relative defect of `H psi = E psi` over interior nodes.
pub fn eigen_residual_1d(state: &ClosedFormState, grid: &Grid1D) -> Result<f64> {
    let field = sample_1d(state, grid)?;
    let applied = apply_h_1d(state.params(), &field, grid);
    let e = state.energy();
    let mut num = 0.0;
    let mut den = 0.0;
    let mut base = 0.0;
    for c in 0..4 {
        let (hp, p) = (applied.comp(c), field.comp(c));
        for i in grid.interior() {
            num += (hp[i] - p[i] * e).norm_sqr();
            den += (p[i] * e).norm_sqr();
            base += p[i].norm_sqr();
        }
    }
    let den = if den > 0.0 { den.sqrt() } else { state.params().energy_scale() * base.sqrt() };
    Ok(num.sqrt() / den)
}

fn check_slab(comp: &[Complex64], grid: &Grid2D) {
    assert_eq!(comp.len(), grid.n() * grid.n(), "slab sampled on a different grid");
}

fn apply_ladder_2d(
    comp: &[Complex64],
    grid: &Grid2D,
    params: &PhysParams,
    sign: f64,
) -> Vec<Complex64> {
    check_slab(comp, grid);
    let n = grid.n();
    let h = grid.h();
    let (hbar, q) = (params.hbar(), params.q());
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for iy in grid.interior() {
        let y = grid.node(iy);
        for ix in grid.interior() {
            let x = grid.node(ix);
            let idx = iy * n + ix;
            let dx = fd::d1(comp, idx, 1, h);
            let dy = fd::d1(comp, idx, n, h);
            let along_x = MINUS_I * (dx * hbar + comp[idx] * (q * x));
            let along_y = dy * hbar + comp[idx] * (q * y);
            out[idx] = along_x + along_y * sign;
        }
    }
    out
}

/// (p_x - i q x) + i (p_y - i q y) on a scalar slab.
pub fn apply_p_plus_2d(comp: &[Complex64], grid: &Grid2D, params: &PhysParams) -> Vec<Complex64> {
    apply_ladder_2d(comp, grid, params, 1.0)
}

/// (p_x - i q x) - i (p_y - i q y) on a scalar slab.
pub fn apply_p_minus_2d(comp: &[Complex64], grid: &Grid2D, params: &PhysParams) -> Vec<Complex64> {
    apply_ladder_2d(comp, grid, params, -1.0)
}

/// Off-diagonal planar Hamiltonian: c P- on the lower component feeds the
/// upper one and c P+ on the upper feeds the lower.
pub fn apply_h_2d(params: &PhysParams, field: &SpinorField2D, grid: &Grid2D) -> SpinorField2D {
    let n = grid.n();
    assert_eq!(field.n(), n, "field sampled on a different grid");
    let c = params.c();
    let from_lower = apply_p_minus_2d(field.comp(1), grid, params);
    let from_upper = apply_p_plus_2d(field.comp(0), grid, params);
    let mut out = SpinorField2D::zeros(n);
    for (dst, src) in out.comp_mut(0).iter_mut().zip(&from_lower) {
        *dst = *src * c;
    }
    for (dst, src) in out.comp_mut(1).iter_mut().zip(&from_upper) {
        *dst = *src * c;
    }
    out
}

pub fn eigen_residual_2d(state: &ClosedFormState, grid: &Grid2D) -> Result<f64> {
    let field = sample_2d(state, grid)?;
    let applied = apply_h_2d(state.params(), &field, grid);
    let e = state.energy();
    let n = grid.n();
    let mut num = 0.0;
    let mut den = 0.0;
    let mut base = 0.0;
    for c in 0..2 {
        let (hp, p) = (applied.comp(c), field.comp(c));
        for iy in grid.interior() {
            for ix in grid.interior() {
                let idx = iy * n + ix;
                num += (hp[idx] - p[idx] * e).norm_sqr();
                den += (p[idx] * e).norm_sqr();
                base += p[idx].norm_sqr();
            }
        }
    }
    let den = if den > 0.0 { den.sqrt() } else { state.params().energy_scale() * base.sqrt() };
    Ok(num.sqrt() / den)
}

/// Total angular momentum about the symmetry axis:
/// -i hbar (x d_y - y d_x) plus hbar/2 times the spin sign.
pub fn apply_jz_2d(params: &PhysParams, field: &SpinorField2D, grid: &Grid2D) -> SpinorField2D {
    let n = grid.n();
    assert_eq!(field.n(), n, "field sampled on a different grid");
    let h = grid.h();
    let hbar = params.hbar();
    let mut out = SpinorField2D::zeros(n);
    for comp in 0..2 {
        let spin_half = if comp == 0 { 0.5 * hbar } else { -0.5 * hbar };
        let src = field.comp(comp);
        let dst = out.comp_mut(comp);
        for iy in grid.interior() {
            let y = grid.node(iy);
            for ix in grid.interior() {
                let x = grid.node(ix);
                let idx = iy * n + ix;
                let dx = fd::d1(src, idx, 1, h);
                let dy = fd::d1(src, idx, n, h);
                let orbital = MINUS_I * (dy * x - dx * y) * hbar;
                dst[idx] = orbital + src[idx] * spin_half;
            }
        }
    }
    out
}

/// Relative defect of `J_z psi = hbar (m + 1/2) psi`.
pub fn jz_residual_2d(state: &ClosedFormState, grid: &Grid2D) -> Result<f64> {
    let StateKind::TwoD { m_ang, .. } = *state.kind() else {
        return Err(Error::State("jz_residual_2d: not a planar state".into()));
    };
    let eigenvalue = state.params().hbar() * (m_ang as f64 + 0.5);
    let field = sample_2d(state, grid)?;
    let applied = apply_jz_2d(state.params(), &field, grid);
    let n = grid.n();
    let mut num = 0.0;
    let mut den = 0.0;
    for c in 0..2 {
        let (jp, p) = (applied.comp(c), field.comp(c));
        for iy in grid.interior() {
            for ix in grid.interior() {
                let idx = iy * n + ix;
                num += (jp[idx] - p[idx] * eigenvalue).norm_sqr();
                den += (p[idx] * eigenvalue).norm_sqr();
            }
        }
    }
    Ok(num.sqrt() / den.sqrt())
}

/// Defects of the coupled first-order radial system, one per equation.
///
/// With u the upper and v the lower radial profile and lambda the orbital
/// label of the lower one:
///
/// ```text
/// v' + ((lambda+1)/r) v + (q/hbar) r v = ((E - m c^2)/(hbar c)) u
/// u' - ((lambda-1)/r) u + (q/hbar) r u = -((E + m c^2)/(hbar c)) v
/// ```
pub fn radial_system_residuals_3d(
    state: &ClosedFormState,
    grid: &RadialGrid,
) -> Result<(f64, f64)> {
    let StateKind::ThreeD { jm, .. } = *state.kind() else {
        return Err(Error::State("radial_system_residuals_3d: not a spherical state".into()));
    };
    let lambda = f64::from(jm.lambda());
    let params = state.params();
    let (hbar, c, q) = (params.hbar(), params.c(), params.q());
    let mc2 = params.mass() * c * c;
    let e = state.energy();
    let u: Vec<f64> =
        (0..grid.n()).map(|i| state.radial_upper(grid.node(i))).collect::<Result<_>>()?;
    let v: Vec<f64> =
        (0..grid.n()).map(|i| state.radial_lower(grid.node(i))).collect::<Result<_>>()?;
    let couple_a = (e - mc2) / (hbar * c);
    let couple_b = (e + mc2) / (hbar * c);
    let h = grid.h();
    let mut num_a = 0.0;
    let mut den_a = 0.0;
    let mut num_b = 0.0;
    let mut den_b = 0.0;
    let mut base = 0.0;
    for i in grid.interior() {
        let r = grid.node(i);
        let du = fd::d1(&u, i, 1, h);
        let dv = fd::d1(&v, i, 1, h);
        let lhs_a = dv + ((lambda + 1.0) / r + q / hbar * r) * v[i];
        let rhs_a = couple_a * u[i];
        num_a += (lhs_a - rhs_a) * (lhs_a - rhs_a);
        den_a += rhs_a * rhs_a;
        let lhs_b = du + (-(lambda - 1.0) / r + q / hbar * r) * u[i];
        let rhs_b = -couple_b * v[i];
        num_b += (lhs_b - rhs_b) * (lhs_b - rhs_b);
        den_b += rhs_b * rhs_b;
        base += u[i] * u[i] + v[i] * v[i];
    }
    let fallback = base.sqrt() / params.length_scale();
    let den_a = if den_a > 0.0 { den_a.sqrt() } else { fallback };
    let den_b = if den_b > 0.0 { den_b.sqrt() } else { fallback };
    Ok((num_a.sqrt() / den_a, num_b.sqrt() / den_b))
}

/// Defect of w'' + 2 z w' + z^2 w + (alpha^2 + 1) w = 0 for the
/// dimensionless 1D profile, relative to the constant term.
pub fn profile_ode_residual_1d(alpha: f64, grid: &Grid1D) -> f64 {
    assert!(alpha.is_finite(), "alpha must be finite");
    let k1 = alpha * alpha + 1.0;
    let w: Vec<Complex64> = (0..grid.n()).map(|i| scalar_factor_1d(alpha, grid.node(i))).collect();
    let h = grid.h();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in grid.interior() {
        let z = grid.node(i);
        let defect =
            fd::d2(&w, i, 1, h) + fd::d1(&w, i, 1, h) * (2.0 * z) + w[i] * (z * z + k1);
        num += defect.norm_sqr();
        den += (w[i] * k1).norm_sqr();
    }
    num.sqrt() / den.sqrt()
}

/// Defect of f'' + (1/r + 2r) f' + (r^2 - m^2/r^2) f + (alpha^2 + 2) f = 0
/// for the dimensionless planar radial profile.
pub fn profile_ode_residual_2d(m_ang: u32, alpha: f64, grid: &RadialGrid) -> Result<f64> {
    if !alpha.is_finite() {
        return Err(Error::Params(format!("profile_ode_residual_2d: alpha = {alpha}")));
    }
    let k3 = alpha * alpha + 2.0;
    let m2 = f64::from(m_ang) * f64::from(m_ang);
    let f: Vec<f64> = (0..grid.n())
        .map(|i| scalar_factor_2d(m_ang, alpha, grid.node(i)))
        .collect::<Result<_>>()?;
    let h = grid.h();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in grid.interior() {
        let r = grid.node(i);
        let defect = fd::d2(&f, i, 1, h)
            + (1.0 / r + 2.0 * r) * fd::d1(&f, i, 1, h)
            + (r * r - m2 / (r * r) + k3) * f[i];
        num += defect * defect;
        den += (k3 * f[i]) * (k3 * f[i]);
    }
    Ok(num.sqrt() / den.sqrt())
}

/// Defect of u'' + (2/r + 2r) u' + (r^2 - n(n+1)/r^2) u + (alpha^2 + 3) u = 0
/// for the dimensionless spherical radial profile.
pub fn profile_ode_residual_3d(order: u32, alpha: f64, grid: &RadialGrid) -> Result<f64> {
    if !alpha.is_finite() {
        return Err(Error::Params(format!("profile_ode_residual_3d: alpha = {alpha}")));
    }
    let k4 = alpha * alpha + 3.0;
    let centrifugal = f64::from(order) * f64::from(order + 1);
    let u: Vec<f64> = (0..grid.n())
        .map(|i| scalar_factor_3d(order, alpha, grid.node(i)))
        .collect::<Result<_>>()?;
    let h = grid.h();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in grid.interior() {
        let r = grid.node(i);
        let defect = fd::d2(&u, i, 1, h)
            + (2.0 / r + 2.0 * r) * fd::d1(&u, i, 1, h)
            + (r * r - centrifugal / (r * r) + k4) * u[i];
        num += defect * defect;
        den += (k4 * u[i]) * (k4 * u[i]);
    }
    Ok(num.sqrt() / den.sqrt())
}
