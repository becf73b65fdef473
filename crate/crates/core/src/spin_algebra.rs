//! Dirac and Pauli matrix algebra plus the spin-angle machinery for the
//! three-dimensional states: two-component spherical spinors y^{j m}_l,
//! the operator sigma . L applied term by term through ladder operators,
//! and sigma . rhat as an explicit 2x2 matrix field.
//!
//! Angular momenta are carried as doubled integers (two_j, two_m) so that
//! half-odd values stay exact; everything derived from them (Clebsch-Gordan
//! square roots, sigma . L eigenvalues) is computed from those integers.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::spherical_harmonic;

type C64 = Complex64;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// 2x2 complex matrix, row major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[C64; 2]; 2]);

impl Mat2 {
    pub fn zero() -> Self {
        Mat2([[c(0.0, 0.0); 2]; 2])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        m.0[0][0] = c(1.0, 0.0);
        m.0[1][1] = c(1.0, 0.0);
        m
    }

    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }
}

impl std::ops::Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = (0..2).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        out
    }
}

impl std::ops::Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl std::ops::Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] -= rhs.0[i][j];
            }
        }
        out
    }
}

/// 4x4 complex matrix, row major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat4(pub [[C64; 4]; 4]);

impl Mat4 {
    pub fn zero() -> Self {
        Mat4([[c(0.0, 0.0); 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.0[i][i] = c(1.0, 0.0);
        }
        m
    }

    /// Block matrix [[a, b], [d, e]] of 2x2 blocks.
    pub fn from_blocks(a: Mat2, b: Mat2, d: Mat2, e: Mat2) -> Self {
        let mut m = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.0[i][j] = a.0[i][j];
                m.0[i][j + 2] = b.0[i][j];
                m.0[i + 2][j] = d.0[i][j];
                m.0[i + 2][j + 2] = e.0[i][j];
            }
        }
        m
    }

    pub fn apply(&self, v: [C64; 4]) -> [C64; 4] {
        let mut out = [c(0.0, 0.0); 4];
        for (row, slot) in self.0.iter().zip(out.iter_mut()) {
            *slot = row.iter().zip(v.iter()).map(|(&m, &x)| m * x).sum();
        }
        out
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for entry in row.iter_mut() {
                *entry *= s;
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut out = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        out
    }
}

impl std::ops::Add for Mat4 {
    type Output = Mat4;
    fn add(self, rhs: Mat4) -> Mat4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl std::ops::Sub for Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: Mat4) -> Mat4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] -= rhs.0[i][j];
            }
        }
        out
    }
}

pub fn commutator(a: Mat4, b: Mat4) -> Mat4 {
    a * b - b * a
}

pub fn anticommutator(a: Mat4, b: Mat4) -> Mat4 {
    a * b + b * a
}

pub fn pauli_x() -> Mat2 {
    Mat2([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]])
}

pub fn pauli_y() -> Mat2 {
    Mat2([[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]])
}

pub fn pauli_z() -> Mat2 {
    Mat2([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]])
}

/// alpha_x in the Dirac representation: off-diagonal sigma_x blocks.
pub fn alpha_x() -> Mat4 {
    Mat4::from_blocks(Mat2::zero(), pauli_x(), pauli_x(), Mat2::zero())
}

pub fn alpha_y() -> Mat4 {
    Mat4::from_blocks(Mat2::zero(), pauli_y(), pauli_y(), Mat2::zero())
}

pub fn alpha_z() -> Mat4 {
    Mat4::from_blocks(Mat2::zero(), pauli_z(), pauli_z(), Mat2::zero())
}

/// beta = diag(1, 1, -1, -1).
pub fn beta() -> Mat4 {
    Mat4::from_blocks(
        Mat2::identity(),
        Mat2::zero(),
        Mat2::zero(),
        Mat2::identity().apply_sign(),
    )
}

impl Mat2 {
    fn apply_sign(self) -> Mat2 {
        let mut out = self;
        for row in out.0.iter_mut() {
            for entry in row.iter_mut() {
                *entry = -*entry;
            }
        }
        out
    }
}

/// Spin operator component Sigma_z = diag(sigma_z, sigma_z).
pub fn sigma_z_ext() -> Mat4 {
    Mat4::from_blocks(pauli_z(), Mat2::zero(), Mat2::zero(), pauli_z())
}

/// sigma . rhat at the given spherical angles.
pub fn sigma_dot_rhat(theta: f64, phi: f64) -> Mat2 {
    let (st, ct) = (theta.sin(), theta.cos());
    let e_minus = c(phi.cos(), -phi.sin());
    let e_plus = c(phi.cos(), phi.sin());
    Mat2([
        [c(ct, 0.0), st * e_minus],
        [st * e_plus, c(-ct, 0.0)],
    ])
}

/// Total angular momentum labels (j, m) of a spin-1/2 particle, stored
/// doubled so the half-odd values stay exact integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AngularMomentum {
    two_j: u32,
    two_m: i32,
}

impl AngularMomentum {
    pub fn new(two_j: u32, two_m: i32) -> Result<Self> {
        if two_j % 2 == 0 {
            return Err(Error::QuantumNumbers(format!(
                "two_j = {two_j} must be odd (j half-odd for a spin-1/2 particle)"
            )));
        }
        if two_m.rem_euclid(2) == 0 {
            return Err(Error::QuantumNumbers(format!("two_m = {two_m} must be odd")));
        }
        if two_m.unsigned_abs() > two_j {
            return Err(Error::QuantumNumbers(format!(
                "|two_m| = {} exceeds two_j = {two_j}",
                two_m.unsigned_abs()
            )));
        }
        Ok(Self { two_j, two_m })
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn two_m(&self) -> i32 {
        self.two_m
    }

    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    pub fn m(&self) -> f64 {
        self.two_m as f64 / 2.0
    }

    /// lambda = j + 1/2, always a positive integer here.
    pub fn lambda(&self) -> u32 {
        self.two_j.div_ceil(2)
    }
}

/// Which orbital angular momentum pairs with j: l = j - 1/2 or l = j + 1/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitalBranch {
    /// l = j - 1/2 = lambda - 1
    Lower,
    /// l = j + 1/2 = lambda
    Upper,
}

/// Two-component spherical spinor y^{j m}_l: the Clebsch-Gordan combination
/// of Y_{l, m -/+ 1/2} with spin up/down that carries total momentum (j, m).
#[derive(Clone, Copy, Debug)]
pub struct SpinAngle {
    jm: AngularMomentum,
    branch: OrbitalBranch,
    l: u32,
    coeff_up: f64,
    coeff_dn: f64,
}

impl SpinAngle {
    pub fn new(jm: AngularMomentum, branch: OrbitalBranch) -> Result<Self> {
        let lambda = jm.lambda();
        let l = match branch {
            OrbitalBranch::Lower => lambda - 1,
            OrbitalBranch::Upper => lambda,
        };
        let two_j = jm.two_j as f64;
        let two_m = jm.two_m as f64;
        let (coeff_up, coeff_dn) = match branch {
            OrbitalBranch::Lower => (
                ((two_j + two_m) / (2.0 * two_j)).sqrt(),
                ((two_j - two_m) / (2.0 * two_j)).sqrt(),
            ),
            OrbitalBranch::Upper => (
                -((two_j - two_m + 2.0) / (2.0 * (two_j + 2.0))).sqrt(),
                ((two_j + two_m + 2.0) / (2.0 * (two_j + 2.0))).sqrt(),
            ),
        };
        Ok(Self { jm, branch, l, coeff_up, coeff_dn })
    }

    pub fn jm(&self) -> AngularMomentum {
        self.jm
    }

    pub fn branch(&self) -> OrbitalBranch {
        self.branch
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Harmonic order of the spin-up component, m - 1/2.
    pub fn m_up(&self) -> i32 {
        (self.jm.two_m - 1) / 2
    }

    /// Harmonic order of the spin-down component, m + 1/2.
    pub fn m_dn(&self) -> i32 {
        (self.jm.two_m + 1) / 2
    }

    pub fn coeff_up(&self) -> f64 {
        self.coeff_up
    }

    pub fn coeff_dn(&self) -> f64 {
        self.coeff_dn
    }

    pub fn eval(&self, theta: f64, phi: f64) -> Result<[C64; 2]> {
        let up = if self.coeff_up == 0.0 {
            c(0.0, 0.0)
        } else {
            self.coeff_up * spherical_harmonic(self.l, self.m_up(), theta, phi)?
        };
        let dn = if self.coeff_dn == 0.0 {
            c(0.0, 0.0)
        } else {
            self.coeff_dn * spherical_harmonic(self.l, self.m_dn(), theta, phi)?
        };
        Ok([up, dn])
    }

    /// The partner with the other orbital branch and the same (j, m).
    pub fn flipped(&self) -> Result<SpinAngle> {
        let other = match self.branch {
            OrbitalBranch::Lower => OrbitalBranch::Upper,
            OrbitalBranch::Upper => OrbitalBranch::Lower,
        };
        SpinAngle::new(self.jm, other)
    }

    pub fn expansion(&self) -> TwoSpinorExpansion {
        let mut up = Vec::new();
        let mut dn = Vec::new();
        if self.coeff_up != 0.0 {
            up.push((self.l, self.m_up(), c(self.coeff_up, 0.0)));
        }
        if self.coeff_dn != 0.0 {
            dn.push((self.l, self.m_dn(), c(self.coeff_dn, 0.0)));
        }
        TwoSpinorExpansion { up, dn }
    }
}

/// A 2-spinor written as finite sums of spherical harmonics per component;
/// the exact representation that angular momentum operators act on.
#[derive(Clone, Debug, Default)]
pub struct TwoSpinorExpansion {
    /// (l, m, coefficient) terms of the spin-up component
    pub up: Vec<(u32, i32, C64)>,
    /// terms of the spin-down component
    pub dn: Vec<(u32, i32, C64)>,
}

impl TwoSpinorExpansion {
    pub fn eval(&self, theta: f64, phi: f64) -> Result<[C64; 2]> {
        let mut out = [c(0.0, 0.0); 2];
        for &(l, m, coeff) in &self.up {
            out[0] += coeff * spherical_harmonic(l, m, theta, phi)?;
        }
        for &(l, m, coeff) in &self.dn {
            out[1] += coeff * spherical_harmonic(l, m, theta, phi)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, s: C64) -> Self {
        Self {
            up: self.up.iter().map(|&(l, m, a)| (l, m, s * a)).collect(),
            dn: self.dn.iter().map(|&(l, m, a)| (l, m, s * a)).collect(),
        }
    }
}

fn ladder_factor(l: u32, m: i32, step: i32) -> f64 {
    let lf = l as f64;
    let mf = m as f64;
    let inside = lf * (lf + 1.0) - mf * (mf + step as f64);
    if inside <= 0.0 {
        0.0
    } else {
        inside.sqrt()
    }
}

/// sigma . L applied to an expansion, exactly, via
/// (sigma . L chi)_up = L_z chi_up + L_- chi_dn and
/// (sigma . L chi)_dn = -L_z chi_dn + L_+ chi_up.
pub fn sigma_dot_l(chi: &TwoSpinorExpansion, hbar: f64) -> TwoSpinorExpansion {
    let mut up = Vec::new();
    let mut dn = Vec::new();
    for &(l, m, a) in &chi.up {
        if m != 0 {
            up.push((l, m, hbar * m as f64 * a));
        }
        let f = ladder_factor(l, m, 1);
        if f != 0.0 {
            dn.push((l, m + 1, hbar * f * a));
        }
    }
    for &(l, m, a) in &chi.dn {
        if m != 0 {
            dn.push((l, m, -hbar * m as f64 * a));
        }
        let f = ladder_factor(l, m, -1);
        if f != 0.0 {
            up.push((l, m - 1, hbar * f * a));
        }
    }
    TwoSpinorExpansion { up, dn }
}

/// sigma . L eigenvalue (in units of hbar) on y^{j m}_l from the Casimir
/// route (J^2 - L^2 - S^2) / hbar^2; exact in doubles for half-odd j.
pub fn kappa_from_casimir(two_j: u32, l: u32) -> f64 {
    let jj = (two_j as f64) * (two_j as f64 + 2.0) / 4.0;
    let ll = (l as f64) * (l as f64 + 1.0);
    jj - ll - 0.75
}

/// The same eigenvalue labeled by the orbital branch: lambda - 1 on the
/// lower branch, -(lambda + 1) on the upper.
pub fn kappa_eigenvalue(branch: OrbitalBranch, two_j: u32) -> f64 {
    let lambda = two_j.div_ceil(2) as f64;
    match branch {
        OrbitalBranch::Lower => lambda - 1.0,
        OrbitalBranch::Upper => -(lambda + 1.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::SphereQuadrature;

    fn mat4_close(a: Mat4, b: Mat4, tol: f64) -> bool {
        (a - b).max_abs() <= tol
    }

    #[test]
    fn dirac_matrices_satisfy_the_clifford_algebra() {
        let alphas = [alpha_x(), alpha_y(), alpha_z()];
        let two_id = Mat4::identity().scale(c(2.0, 0.0));
        for (i, &a) in alphas.iter().enumerate() {
            for (j, &b) in alphas.iter().enumerate() {
                let want = if i == j { two_id } else { Mat4::zero() };
                assert!(mat4_close(anticommutator(a, b), want, 0.0), "alpha {i},{j}");
            }
            assert!(mat4_close(anticommutator(a, beta()), Mat4::zero(), 0.0));
        }
        assert!(mat4_close(beta() * beta(), Mat4::identity(), 0.0));
    }

    #[test]
    fn sigma_z_ext_commutes_with_alpha_z_and_beta() {
        assert!(mat4_close(commutator(sigma_z_ext(), alpha_z()), Mat4::zero(), 0.0));
        assert!(mat4_close(commutator(sigma_z_ext(), beta()), Mat4::zero(), 0.0));
    }

    #[test]
    fn pauli_products_close_into_the_algebra() {
        let i = c(0.0, 1.0);
        let xy = pauli_x() * pauli_y();
        let want = Mat2([[i, c(0.0, 0.0)], [c(0.0, 0.0), -i]]);
        assert_eq!(xy, want);
        assert_eq!(pauli_x() * pauli_x(), Mat2::identity());
    }

    #[test]
    fn sigma_dot_rhat_squares_to_identity() {
        for &(th, ph) in &[(0.3, 0.0), (1.2, 2.5), (2.9, -1.0), (1.6, 4.0)] {
            let s = sigma_dot_rhat(th, ph);
            let sq = s * s;
            let diff = sq - Mat2::identity();
            let max = diff
                .0
                .iter()
                .flatten()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            assert!(max < 1e-15, "at ({th}, {ph}): {max}");
        }
    }

    #[test]
    fn angular_momentum_rejects_bad_labels() {
        assert!(AngularMomentum::new(2, 1).is_err());
        assert!(AngularMomentum::new(3, 2).is_err());
        assert!(AngularMomentum::new(3, 5).is_err());
        assert!(AngularMomentum::new(3, -5).is_err());
        let jm = AngularMomentum::new(3, -1).unwrap();
        assert_eq!(jm.lambda(), 2);
        assert_eq!(jm.j(), 1.5);
        assert_eq!(jm.m(), -0.5);
    }

    #[test]
    fn stretched_spinor_coefficients() {
        // j = 3/2, m = 3/2: lower branch is pure (Y_{1,1}, 0); the upper
        // branch combines Y_{2,1} and Y_{2,2} with weights sqrt(1/5), sqrt(4/5)
        let jm = AngularMomentum::new(3, 3).unwrap();
        let lower = SpinAngle::new(jm, OrbitalBranch::Lower).unwrap();
        assert_eq!(lower.l(), 1);
        assert!((lower.coeff_up() - 1.0).abs() < 1e-15);
        assert_eq!(lower.coeff_dn(), 0.0);

        let upper = SpinAngle::new(jm, OrbitalBranch::Upper).unwrap();
        assert_eq!(upper.l(), 2);
        assert!((upper.coeff_up() + 0.2_f64.sqrt()).abs() < 1e-15);
        assert!((upper.coeff_dn() - 0.8_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn spin_angle_orthonormal_on_the_sphere() {
        let rule = SphereQuadrature::new(24, 48).unwrap();
        let mut functions = Vec::new();
        for two_j in [1u32, 3, 5] {
            let mut two_m = -(two_j as i32);
            while two_m <= two_j as i32 {
                for branch in [OrbitalBranch::Lower, OrbitalBranch::Upper] {
                    let jm = AngularMomentum::new(two_j, two_m).unwrap();
                    functions.push(SpinAngle::new(jm, branch).unwrap());
                }
                two_m += 2;
            }
        }
        for (a, fa) in functions.iter().enumerate() {
            for (b, fb) in functions.iter().enumerate() {
                let overlap = rule.integrate(|th, ph| {
                    let u = fa.eval(th, ph).unwrap();
                    let v = fb.eval(th, ph).unwrap();
                    u[0].conj() * v[0] + u[1].conj() * v[1]
                });
                let want = if a == b { 1.0 } else { 0.0 };
                assert!(
                    (overlap - want).norm() < 1e-12,
                    "overlap ({a}, {b}) = {overlap}"
                );
            }
        }
    }

    #[test]
    fn sigma_dot_rhat_flips_the_orbital_branch() {
        let rule = SphereQuadrature::new(16, 32).unwrap();
        for (two_j, two_m) in [(1u32, 1i32), (1, -1), (3, 3), (3, 1), (5, -3)] {
            let jm = AngularMomentum::new(two_j, two_m).unwrap();
            let lower = SpinAngle::new(jm, OrbitalBranch::Lower).unwrap();
            let upper = lower.flipped().unwrap();
            // (sigma . rhat) y_lower + y_upper should vanish identically
            let norm2 = rule.integrate(|th, ph| {
                let v = sigma_dot_rhat(th, ph).apply(lower.eval(th, ph).unwrap());
                let w = upper.eval(th, ph).unwrap();
                let d0 = v[0] + w[0];
                let d1 = v[1] + w[1];
                d0.conj() * d0 + d1.conj() * d1
            });
            assert!(norm2.norm() < 1e-24, "j2={two_j} m2={two_m}: {norm2}");
        }
    }

    #[test]
    fn sigma_dot_l_reproduces_kappa_on_spin_angle_functions() {
        for (two_j, two_m) in [(1u32, 1i32), (1, -1), (3, 3), (3, -1), (5, 1), (7, -7)] {
            for branch in [OrbitalBranch::Lower, OrbitalBranch::Upper] {
                let jm = AngularMomentum::new(two_j, two_m).unwrap();
                let y = SpinAngle::new(jm, branch).unwrap();
                let kappa = kappa_eigenvalue(branch, two_j);
                assert_eq!(kappa, kappa_from_casimir(two_j, y.l()), "kappa routes");
                let applied = sigma_dot_l(&y.expansion(), 1.0);
                let scaled = y.expansion().scaled(c(kappa, 0.0));
                for &(th, ph) in &[(0.7, 0.4), (1.9, -2.2), (2.5, 5.1)] {
                    let a = applied.eval(th, ph).unwrap();
                    let b = scaled.eval(th, ph).unwrap();
                    assert!(
                        (a[0] - b[0]).norm() < 1e-13 && (a[1] - b[1]).norm() < 1e-13,
                        "j2={two_j} m2={two_m} {branch:?} at ({th}, {ph})"
                    );
                }
            }
        }
    }

    #[test]
    fn sigma_dot_l_includes_the_hbar_factor() {
        let jm = AngularMomentum::new(3, 1).unwrap();
        let y = SpinAngle::new(jm, OrbitalBranch::Lower).unwrap();
        let with_hbar = sigma_dot_l(&y.expansion(), 0.5);
        let without = sigma_dot_l(&y.expansion(), 1.0);
        let (th, ph) = (1.1, 0.9);
        let a = with_hbar.eval(th, ph).unwrap();
        let b = without.eval(th, ph).unwrap();
        assert!((a[0] - 0.5 * b[0]).norm() < 1e-16);
        assert!((a[1] - 0.5 * b[1]).norm() < 1e-16);
    }
}
