//! Spherical harmonics in the quantum-mechanics convention: orthonormal on
//! the sphere, Condon-Shortley phase folded into the associated Legendre
//! part, Y_{l,-m} = (-1)^m conj(Y_{l,m}).
//!
//! The associated Legendre part is evaluated with the fully normalized
//! upward recurrence in l, which is stable for every degree supported here.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest supported degree l.
pub const MAX_DEGREE: u32 = 32;

/// Y_l^m(theta, phi) with 0 <= theta <= pi.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    if l > MAX_DEGREE {
        return Err(Error::domain(
            "spherical_harmonic",
            format!("degree {l} exceeds {MAX_DEGREE}"),
        ));
    }
    if m.unsigned_abs() > l {
        return Err(Error::domain(
            "spherical_harmonic",
            format!("|m| = {} exceeds l = {l}", m.unsigned_abs()),
        ));
    }
    if !theta.is_finite() || !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(Error::domain(
            "spherical_harmonic",
            format!("theta {theta} outside [0, pi]"),
        ));
    }
    if !phi.is_finite() {
        return Err(Error::domain("spherical_harmonic", format!("phi {phi} not finite")));
    }
    let m_abs = m.unsigned_abs();
    let p = normalized_assoc_legendre(l, m_abs, theta);
    let y = p * Complex64::new(0.0, m_abs as f64 * phi).exp();
    if m < 0 {
        let sign = if m_abs % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * y.conj())
    } else {
        Ok(y)
    }
}

/// sqrt((2l+1)(l-m)! / (4 pi (l+m)!)) P_l^m(cos theta) for m >= 0, with the
/// Condon-Shortley (-1)^m inside P_l^m.
pub(crate) fn normalized_assoc_legendre(l: u32, m: u32, theta: f64) -> f64 {
    let (sin_t, cos_t) = theta.sin_cos();
    // seed: fully normalized P_m^m
    let mut pmm = (1.0 / (4.0 * std::f64::consts::PI)).sqrt();
    for i in 1..=m {
        let i = i as f64;
        pmm *= -((2.0 * i + 1.0) / (2.0 * i)).sqrt() * sin_t;
    }
    if l == m {
        return pmm;
    }
    let mut below = pmm; // P_{l'-1}^m
    let mut cur = (2.0 * m as f64 + 3.0).sqrt() * cos_t * pmm; // P_{m+1}^m
    if l == m + 1 {
        return cur;
    }
    for lp in (m + 2)..=l {
        let lf = lp as f64;
        let mf = m as f64;
        let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
        let b = (((lf - 1.0) * (lf - 1.0) - mf * mf) / (4.0 * (lf - 1.0) * (lf - 1.0) - 1.0)).sqrt();
        let next = a * (cos_t * cur - b * below);
        below = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn explicit_low_degree_forms() {
        let th = 0.9_f64;
        let ph = 1.7_f64;
        let y00 = spherical_harmonic(0, 0, th, ph).unwrap();
        assert!((y00.re - (1.0 / (4.0 * PI)).sqrt()).abs() < 1e-15 && y00.im == 0.0);

        let y10 = spherical_harmonic(1, 0, th, ph).unwrap();
        assert!((y10.re - (3.0 / (4.0 * PI)).sqrt() * th.cos()).abs() < 1e-15);

        let y11 = spherical_harmonic(1, 1, th, ph).unwrap();
        let want = -(3.0 / (8.0 * PI)).sqrt() * th.sin() * Complex64::new(0.0, ph).exp();
        assert!((y11 - want).norm() < 1e-15);

        let y21 = spherical_harmonic(2, 1, th, ph).unwrap();
        let want = -(15.0 / (8.0 * PI)).sqrt() * th.sin() * th.cos() * Complex64::new(0.0, ph).exp();
        assert!((y21 - want).norm() < 1e-14);
    }

    #[test]
    fn poles_vanish_for_m_nonzero() {
        for l in 1..=6u32 {
            for m in 1..=l as i32 {
                let north = spherical_harmonic(l, m, 0.0, 0.3).unwrap();
                let south = spherical_harmonic(l, m, PI, 0.3).unwrap();
                assert!(north.norm() < 1e-14 && south.norm() < 1e-14);
            }
        }
    }

    #[test]
    fn phi_dependence_is_a_pure_phase() {
        let a = spherical_harmonic(4, 3, 1.1, 0.0).unwrap();
        let b = spherical_harmonic(4, 3, 1.1, 0.25).unwrap();
        assert!((a.norm() - b.norm()).abs() < 1e-15);
        let phase = (b / a).arg();
        assert!((phase - 0.75).abs() < 1e-13, "expected phase 3*0.25, got {phase}");
    }
}
