//! Closed-form localized eigenstates in one, two, and three dimensions.
//!
//! Every state is a free-particle structure multiplied by the Gaussian
//! envelope exp(-q r^2 / 2 hbar): a plane-wave bispinor in 1D, a
//! (J_m, J_{m+1}) Bessel pair in 2D (massless), and spherical Bessel
//! functions times two-component spherical spinors in 3D. The envelope
//! comes from shifting the momentum by -i q r, which leaves the energy
//! real and the eigenvalue equation exactly satisfied.
//!
//! Amplitudes between the upper and lower spinor halves follow one of two
//! conventions: `AmpMode::Unit` places equal unit amplitudes (the flat
//! convention that is exact only in the massless limit, kept so the checks
//! can adjudicate it), while `AmpMode::Exact` solves the coupled eigenvalue
//! conditions, giving ratios like c hbar k / (E + m c^2). The negative
//! branch is parameterized from the lower pair so no formula divides by a
//! vanishing or cancellation-prone denominator.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::composite_simpson;
use crate::specfun::{bessel_i, bessel_j, modified_spherical_f, spherical_j};
use crate::spin_algebra::{AngularMomentum, OrbitalBranch, SpinAngle};

type C64 = Complex64;

/// Bound on hbar k^2 / 2q. Beyond it the Gaussian quadrature window
/// sqrt(60 hbar / q) no longer holds the oscillations the radial integrals
/// need, so construction refuses rather than degrade silently.
pub const MAX_GAUSS_ARG: f64 = 60.0;

/// Physical constants of one problem instance. q > 0 is the envelope slope
/// (momentum shift p -> p - i q r); mass may be zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhysParams {
    hbar: f64,
    c: f64,
    q: f64,
    mass: f64,
}

impl PhysParams {
    pub fn new(hbar: f64, c: f64, q: f64, mass: f64) -> Result<Self> {
        for (name, v) in [("hbar", hbar), ("c", c), ("q", q)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Params(format!("{name} = {v} must be finite and > 0")));
            }
        }
        if !mass.is_finite() || mass < 0.0 {
            return Err(Error::Params(format!("mass = {mass} must be finite and >= 0")));
        }
        Ok(Self { hbar, c, q, mass })
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// E = sign * sqrt((hbar k c)^2 + (m c^2)^2).
    pub fn energy(&self, k: f64, branch: Branch) -> f64 {
        branch.sign() * f64::hypot(self.hbar * k * self.c, self.mass * self.c * self.c)
    }

    /// sqrt(hbar / q), the width of the envelope.
    pub fn length_scale(&self) -> f64 {
        (self.hbar / self.q).sqrt()
    }

    /// sqrt(hbar q), the momentum spread of the envelope.
    pub fn momentum_scale(&self) -> f64 {
        (self.hbar * self.q).sqrt()
    }

    /// c sqrt(hbar q); used as the residual denominator when E = 0.
    pub fn energy_scale(&self) -> f64 {
        self.c * self.momentum_scale()
    }

    /// Radius where the squared envelope has fallen to exp(-60); grids and
    /// quadratures truncate here.
    pub fn truncation_radius(&self) -> f64 {
        (60.0 * self.hbar / self.q).sqrt()
    }
}

/// Sign of the energy: the two roots of the dispersion relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(&self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }

    pub fn parse_token(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Branch::Plus),
            "-" | "minus" => Ok(Branch::Minus),
            other => Err(Error::Params(format!("unknown branch '{other}', expected + or -"))),
        }
    }
}

/// Spin projection of the 1D states along z.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn sign(&self) -> f64 {
        match self {
            Spin::Up => 1.0,
            Spin::Down => -1.0,
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            Spin::Up => "up",
            Spin::Down => "down",
        }
    }

    pub fn parse_token(s: &str) -> Result<Self> {
        match s {
            "up" => Ok(Spin::Up),
            "down" => Ok(Spin::Down),
            other => Err(Error::Params(format!("unknown spin '{other}', expected up or down"))),
        }
    }
}

/// Amplitude convention between the spinor halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmpMode {
    /// Equal unit amplitudes; an exact eigenvector only in the massless limit.
    Unit,
    /// Amplitude ratios solved from the eigenvalue conditions.
    Exact,
}

/// Dimensionless combinations that the scalar radial equations run on:
/// alpha = k sqrt(hbar/q), rho = E / (c sqrt(hbar q)), gamma the same built
/// from the kinetic part sqrt(E^2 - m^2 c^4).
#[derive(Clone, Copy, Debug)]
pub struct ScaledConstants {
    pub alpha: f64,
    pub rho: f64,
    pub gamma: f64,
    /// alpha^2 + 1, the constant term of the 1D profile equation
    pub k1: f64,
    /// E^2/(c hbar)^2 + 2q/hbar, its dimensionful 2D counterpart
    pub k2: f64,
    /// rho^2 + 2, the dimensionless 2D constant
    pub k3: f64,
    /// gamma^2 + 3, the 3D constant
    pub k4: f64,
}

/// Which geometry a state lives in, together with its amplitude content.
#[derive(Clone, Copy, Debug)]
pub enum StateKind {
    OneD { spin: Spin, amps: [C64; 4] },
    TwoD { m_ang: u32, lower_amp: C64 },
    ThreeD { jm: AngularMomentum, amp_upper: f64, amp_lower: f64 },
}

/// A fully constructed eigenstate: closed-form amplitudes, energy, and the
/// normalization constant that makes the total probability one.
#[derive(Clone, Copy, Debug)]
pub struct ClosedFormState {
    params: PhysParams,
    k: f64,
    branch: Branch,
    energy: f64,
    norm: f64,
    kind: StateKind,
}

impl ClosedFormState {
    pub fn params(&self) -> &PhysParams {
        &self.params
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// The closed-form normalization constant N.
    pub fn norm_constant(&self) -> f64 {
        self.norm
    }

    pub fn kind(&self) -> &StateKind {
        &self.kind
    }

    pub fn dimension(&self) -> u8 {
        match self.kind {
            StateKind::OneD { .. } => 1,
            StateKind::TwoD { .. } => 2,
            StateKind::ThreeD { .. } => 3,
        }
    }

    /// hbar k^2 / 2q, the argument of the modified Bessel weights in the
    /// closed-form norms.
    pub fn gauss_arg(&self) -> f64 {
        self.params.hbar * self.k * self.k / (2.0 * self.params.q)
    }

    pub fn scaled_constants(&self) -> ScaledConstants {
        let p = &self.params;
        let alpha = self.k * p.length_scale();
        let rho = self.energy / p.energy_scale();
        let mc2 = p.mass * p.c * p.c;
        let kinetic2 = (self.energy * self.energy - mc2 * mc2).max(0.0);
        let gamma = kinetic2.sqrt() / p.energy_scale();
        ScaledConstants {
            alpha,
            rho,
            gamma,
            k1: alpha * alpha + 1.0,
            k2: self.energy * self.energy / (p.c * p.hbar).powi(2) + 2.0 * p.q / p.hbar,
            k3: rho * rho + 2.0,
            k4: gamma * gamma + 3.0,
        }
    }

    fn envelope(&self, r2: f64) -> f64 {
        (-self.params.q * r2 / (2.0 * self.params.hbar)).exp()
    }

    /// The four spinor components at position z.
    pub fn eval_1d(&self, z: f64) -> Result<[C64; 4]> {
        let StateKind::OneD { amps, .. } = self.kind else {
            return Err(Error::State("eval_1d on a state that is not one-dimensional".into()));
        };
        if !z.is_finite() {
            return Err(Error::State(format!("position {z} not finite")));
        }
        let factor = self.norm * C64::new(0.0, self.k * z).exp() * self.envelope(z * z);
        Ok(amps.map(|a| a * factor))
    }

    /// The two spinor components at Cartesian position (x, y).
    pub fn eval_2d(&self, x: f64, y: f64) -> Result<[C64; 2]> {
        let StateKind::TwoD { m_ang, lower_amp } = self.kind else {
            return Err(Error::State("eval_2d on a state that is not two-dimensional".into()));
        };
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::State(format!("position ({x}, {y}) not finite")));
        }
        let r = f64::hypot(x, y);
        let phi = f64::atan2(y, x);
        let env = self.norm * self.envelope(r * r);
        let up = bessel_j(m_ang, self.k * r)? * C64::new(0.0, m_ang as f64 * phi).exp() * env;
        let lo = lower_amp
            * bessel_j(m_ang + 1, self.k * r)?
            * C64::new(0.0, (m_ang as f64 + 1.0) * phi).exp()
            * env;
        Ok([up, lo])
    }

    /// The four spinor components at spherical position (r, theta, phi).
    pub fn eval_3d(&self, r: f64, theta: f64, phi: f64) -> Result<[C64; 4]> {
        let StateKind::ThreeD { jm, .. } = self.kind else {
            return Err(Error::State("eval_3d on a state that is not three-dimensional".into()));
        };
        let top = self.radial_upper(r)?;
        let bot = C64::new(0.0, -1.0) * self.radial_lower(r)?;
        let y_top = SpinAngle::new(jm, OrbitalBranch::Lower)?.eval(theta, phi)?;
        let y_bot = SpinAngle::new(jm, OrbitalBranch::Upper)?.eval(theta, phi)?;
        Ok([
            top * y_top[0],
            top * y_top[1],
            bot * y_bot[0],
            bot * y_bot[1],
        ])
    }

    /// Radial profile of the upper spinor half, N A j_{lambda-1}(kr) times
    /// the envelope; 3D states only.
    pub fn radial_upper(&self, r: f64) -> Result<f64> {
        let StateKind::ThreeD { jm, amp_upper, .. } = self.kind else {
            return Err(Error::State("radial profile of a state that is not three-dimensional".into()));
        };
        if !r.is_finite() || r < 0.0 {
            return Err(Error::State(format!("radius {r} must be finite and >= 0")));
        }
        let lambda = jm.lambda();
        Ok(self.norm * amp_upper * spherical_j(lambda - 1, self.k * r)? * self.envelope(r * r))
    }

    /// Radial profile of the lower spinor half without its -i phase,
    /// N B j_lambda(kr) times the envelope; 3D states only.
    pub fn radial_lower(&self, r: f64) -> Result<f64> {
        let StateKind::ThreeD { jm, amp_lower, .. } = self.kind else {
            return Err(Error::State("radial profile of a state that is not three-dimensional".into()));
        };
        if !r.is_finite() || r < 0.0 {
            return Err(Error::State(format!("radius {r} must be finite and >= 0")));
        }
        let lambda = jm.lambda();
        Ok(self.norm * amp_lower * spherical_j(lambda, self.k * r)? * self.envelope(r * r))
    }

    /// Total probability by quadrature on n nodes (odd), for comparison
    /// against the closed-form normalization. Angular integrals that are
    /// exactly separable are done analytically; the radial (or 1D axial)
    /// integral is numerical.
    pub fn quadrature_norm(&self, n: usize) -> Result<f64> {
        let big_r = self.params.truncation_radius();
        match self.kind {
            StateKind::OneD { .. } => composite_simpson(-big_r, big_r, n, |z| {
                let psi = self.eval_1d(z).expect("1d eval is total on finite z");
                psi.iter().map(|c| c.norm_sqr()).sum()
            }),
            StateKind::TwoD { .. } => {
                let radial = composite_simpson(0.0, big_r, n, |r| {
                    let psi = self.eval_2d(r, 0.0).expect("2d eval is total inside the window");
                    (psi[0].norm_sqr() + psi[1].norm_sqr()) * r
                })?;
                Ok(2.0 * std::f64::consts::PI * radial)
            }
            StateKind::ThreeD { .. } => composite_simpson(0.0, big_r, n, |r| {
                let u = self.radial_upper(r).expect("radial eval is total inside the window");
                let v = self.radial_lower(r).expect("radial eval is total inside the window");
                (u * u + v * v) * r * r
            }),
        }
    }
}

fn check_wavenumber(params: &PhysParams, k: f64, radial: bool) -> Result<()> {
    if !k.is_finite() {
        return Err(Error::Params(format!("k = {k} not finite")));
    }
    if radial && k < 0.0 {
        return Err(Error::Params(format!("radial wavenumber k = {k} must be >= 0")));
    }
    if radial {
        let x = params.hbar * k * k / (2.0 * params.q);
        if x > MAX_GAUSS_ARG {
            return Err(Error::Params(format!(
                "hbar k^2 / 2q = {x:.3} exceeds {MAX_GAUSS_ARG}: oscillations too fast \
                 for the truncation window"
            )));
        }
    }
    Ok(())
}

/// Plane-wave bispinor with a Gaussian envelope along z.
pub fn construct_1d(
    params: PhysParams,
    k: f64,
    spin: Spin,
    branch: Branch,
    mode: AmpMode,
) -> Result<ClosedFormState> {
    check_wavenumber(&params, k, false)?;
    let energy = params.energy(k, branch);
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    let amps = match mode {
        AmpMode::Unit => match spin {
            Spin::Up => [one, zero, one, zero],
            Spin::Down => [zero, one, zero, one],
        },
        AmpMode::Exact => {
            let mc2 = params.mass * params.c * params.c;
            let chk = params.c * params.hbar * k;
            match branch {
                Branch::Plus => {
                    let denom = energy + mc2;
                    let r = if denom == 0.0 { 1.0 } else { chk / denom };
                    match spin {
                        Spin::Up => [one, zero, C64::new(r, 0.0), zero],
                        Spin::Down => [zero, one, zero, C64::new(-r, 0.0)],
                    }
                }
                Branch::Minus => {
                    let denom = energy - mc2;
                    let r = if denom == 0.0 { -1.0 } else { chk / denom };
                    match spin {
                        Spin::Up => [C64::new(r, 0.0), zero, one, zero],
                        Spin::Down => [zero, C64::new(-r, 0.0), zero, one],
                    }
                }
            }
        }
    };
    let sum_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    let norm = 1.0 / (sum_sq * (std::f64::consts::PI * params.hbar / params.q).sqrt()).sqrt();
    Ok(ClosedFormState {
        params,
        k,
        branch,
        energy,
        norm,
        kind: StateKind::OneD { spin, amps },
    })
}

/// Massless planar state (J_m, a J_{m+1}) with angular momentum m + 1/2.
pub fn construct_2d(
    params: PhysParams,
    k: f64,
    m_ang: u32,
    branch: Branch,
    mode: AmpMode,
) -> Result<ClosedFormState> {
    let a = match mode {
        AmpMode::Unit => C64::new(1.0, 0.0),
        AmpMode::Exact => C64::new(0.0, branch.sign()),
    };
    construct_2d_with_amp(params, k, m_ang, branch, a)
}

/// Planar state with an explicitly chosen lower amplitude, the form the
/// least-squares fit feeds back into.
pub fn construct_2d_with_amp(
    params: PhysParams,
    k: f64,
    m_ang: u32,
    branch: Branch,
    lower_amp: C64,
) -> Result<ClosedFormState> {
    if params.mass != 0.0 {
        return Err(Error::Params(
            "the planar closed form requires zero mass".into(),
        ));
    }
    check_wavenumber(&params, k, true)?;
    if m_ang > 63 {
        return Err(Error::QuantumNumbers(format!(
            "m_ang = {m_ang} exceeds the supported Bessel order range"
        )));
    }
    if m_ang >= 1 && k == 0.0 {
        return Err(Error::QuantumNumbers(format!(
            "k = 0 with m_ang = {m_ang} >= 1: every component vanishes identically"
        )));
    }
    if !lower_amp.is_finite() {
        return Err(Error::Params(format!("lower amplitude {lower_amp} not finite")));
    }
    let energy = params.energy(k, branch);
    let x = params.hbar * k * k / (2.0 * params.q);
    let weight = if x == 0.0 {
        1.0
    } else {
        (-x).exp() * (bessel_i(m_ang, x)? + lower_amp.norm_sqr() * bessel_i(m_ang + 1, x)?)
    };
    let norm =
        1.0 / (std::f64::consts::PI * params.hbar / params.q * weight).sqrt();
    Ok(ClosedFormState {
        params,
        k,
        branch,
        energy,
        norm,
        kind: StateKind::TwoD { m_ang, lower_amp },
    })
}

/// Spherical state: j_{lambda-1} times the lower-l spinor on top,
/// -i j_lambda times its flipped partner below, lambda = j + 1/2.
pub fn construct_3d(
    params: PhysParams,
    k: f64,
    jm: AngularMomentum,
    branch: Branch,
    mode: AmpMode,
) -> Result<ClosedFormState> {
    check_wavenumber(&params, k, true)?;
    let lambda = jm.lambda();
    if lambda > 32 {
        return Err(Error::QuantumNumbers(format!(
            "lambda = {lambda} exceeds the supported spherical-harmonic degree range"
        )));
    }
    if k == 0.0 && lambda >= 2 {
        return Err(Error::QuantumNumbers(format!(
            "k = 0 with lambda = {lambda} >= 2: both radial factors vanish identically"
        )));
    }
    let energy = params.energy(k, branch);
    let mc2 = params.mass * params.c * params.c;
    let hkc = params.hbar * k * params.c;
    let (amp_upper, amp_lower) = match mode {
        AmpMode::Unit => (1.0, 1.0),
        AmpMode::Exact => match branch {
            Branch::Plus => {
                let denom = energy + mc2;
                let b = if denom == 0.0 { 1.0 } else { hkc / denom };
                (1.0, b)
            }
            Branch::Minus => {
                let denom = energy - mc2;
                let a = if denom == 0.0 { -1.0 } else { hkc / denom };
                (a, 1.0)
            }
        },
    };
    if k == 0.0 && amp_upper == 0.0 {
        return Err(Error::QuantumNumbers(
            "k = 0 on the negative branch with mass: the surviving component \
             has an identically zero radial factor"
                .into(),
        ));
    }
    let z = params.hbar * k * k / (2.0 * params.q);
    let weight = if z == 0.0 {
        // f_n(0) = 1 for n = 0 and 0 otherwise; only lambda = 1 reaches here
        amp_upper * amp_upper
    } else {
        (-z).exp()
            * (amp_upper * amp_upper * modified_spherical_f(lambda - 1, z)?
                + amp_lower * amp_lower * modified_spherical_f(lambda, z)?)
    };
    let cell = std::f64::consts::PI.sqrt() / 4.0 * (params.hbar / params.q).powf(1.5);
    let norm = 1.0 / (cell * weight).sqrt();
    Ok(ClosedFormState {
        params,
        k,
        branch,
        energy,
        norm,
        kind: StateKind::ThreeD { jm, amp_upper, amp_lower },
    })
}

/// Dimensionless 1D profile exp(i alpha z - z^2/2). Satisfies
/// w'' + 2 z w' + z^2 w + (alpha^2 + 1) w = 0.
pub fn scalar_factor_1d(alpha: f64, z: f64) -> C64 {
    C64::new(-z * z / 2.0, alpha * z).exp()
}

/// Dimensionless planar radial profile J_m(alpha r) exp(-r^2/2). Satisfies
/// f'' + (1/r + 2r) f' + (r^2 - m^2/r^2) f + (alpha^2 + 2) f = 0.
pub fn scalar_factor_2d(m_ang: u32, alpha: f64, r: f64) -> Result<f64> {
    Ok(bessel_j(m_ang, alpha * r)? * (-r * r / 2.0).exp())
}

/// Dimensionless spherical radial profile j_n(alpha r) exp(-r^2/2).
/// Satisfies u'' + (2/r + 2r) u' + (r^2 - n(n+1)/r^2) u + (alpha^2 + 3) u = 0.
pub fn scalar_factor_3d(order: u32, alpha: f64, r: f64) -> Result<f64> {
    Ok(spherical_j(order, alpha * r)? * (-r * r / 2.0).exp())
}
