//! Randomized properties: identities that must hold for any admissible
//! input, not just the tabulated oracle points.

use proptest::prelude::*;

use diracpack_core::operators::{fd, pt_residual_1d, random_envelope_spinor_1d, Grid1D};
use diracpack_core::specfun::{
    bessel_i, bessel_j, modified_spherical_f, spherical_harmonic, spherical_j,
};
use diracpack_core::spin_algebra::{sigma_dot_rhat, AngularMomentum, OrbitalBranch, SpinAngle};
use diracpack_core::states::{construct_1d, AmpMode, Branch, PhysParams, Spin};

fn polyval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn polyder(coeffs: &[f64]) -> Vec<f64> {
    coeffs.iter().enumerate().skip(1).map(|(p, &c)| c * p as f64).collect()
}

/// two_j odd in 1..=9 with an odd projection inside [-two_j, two_j].
fn angular_numbers() -> impl Strategy<Value = AngularMomentum> {
    (0u32..5).prop_flat_map(|j_idx| {
        let two_j = 2 * j_idx + 1;
        (Just(two_j), 0..=two_j).prop_map(|(two_j, m_idx)| {
            let two_m = 2 * i32::try_from(m_idx).unwrap() - i32::try_from(two_j).unwrap();
            AngularMomentum::new(two_j, two_m).unwrap()
        })
    })
}

fn orbital_branch() -> impl Strategy<Value = OrbitalBranch> {
    prop_oneof![Just(OrbitalBranch::Lower), Just(OrbitalBranch::Upper)]
}

proptest! {
    #[test]
    fn bessel_j_recurrence_holds(order in 1u32..=15, x in 0.05f64..40.0) {
        let j = |o: u32| bessel_j(o, x).unwrap();
        let lhs = j(order - 1) + j(order + 1);
        let rhs = 2.0 * f64::from(order) / x * j(order);
        let scale = lhs.abs().max(rhs.abs()).max(1e-280);
        prop_assert!((lhs - rhs).abs() / scale <= 1e-10);
    }

    #[test]
    fn bessel_i_recurrence_holds(order in 1u32..=10, x in 0.05f64..30.0) {
        let i = |o: u32| bessel_i(o, x).unwrap();
        let lhs = i(order - 1) - i(order + 1);
        let rhs = 2.0 * f64::from(order) / x * i(order);
        let scale = i(order - 1).abs().max(1e-280);
        prop_assert!((lhs - rhs).abs() / scale <= 1e-10);
    }

    #[test]
    fn spherical_j_recurrence_holds(order in 1u32..=12, x in 0.05f64..40.0) {
        let j = |o: u32| spherical_j(o, x).unwrap();
        let lhs = j(order - 1) + j(order + 1);
        let rhs = (2.0 * f64::from(order) + 1.0) / x * j(order);
        let scale = lhs.abs().max(rhs.abs()).max(1e-280);
        prop_assert!((lhs - rhs).abs() / scale <= 1e-10);
    }

    #[test]
    fn modified_spherical_f_recurrence_holds(order in 1u32..=10, z in 0.05f64..30.0) {
        let f = |o: u32| modified_spherical_f(o, z).unwrap();
        let lhs = f(order - 1) - f(order + 1);
        let rhs = (2.0 * f64::from(order) + 1.0) / z * f(order);
        let scale = f(order - 1).abs().max(1e-280);
        prop_assert!((lhs - rhs).abs() / scale <= 1e-10);
    }

    #[test]
    fn harmonic_conjugation_flips_the_sign_of_m(
        (l, m) in (0u32..=8).prop_flat_map(|l| {
            let bound = i32::try_from(l).unwrap();
            (Just(l), -bound..=bound)
        }),
        theta in 0.05f64..3.09,
        phi in 0.0f64..std::f64::consts::TAU,
    ) {
        let plus = spherical_harmonic(l, m, theta, phi).unwrap();
        let minus = spherical_harmonic(l, -m, theta, phi).unwrap();
        let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        prop_assert!((minus - plus.conj() * sign).norm() <= 1e-12);
    }

    #[test]
    fn sigma_rhat_squares_to_the_identity(
        theta in 0.0f64..std::f64::consts::PI,
        phi in 0.0f64..std::f64::consts::TAU,
        re0 in -1.0f64..1.0, im0 in -1.0f64..1.0,
        re1 in -1.0f64..1.0, im1 in -1.0f64..1.0,
    ) {
        let m = sigma_dot_rhat(theta, phi);
        let v = [num_complex::Complex64::new(re0, im0), num_complex::Complex64::new(re1, im1)];
        let twice = m.apply(m.apply(v));
        prop_assert!((twice[0] - v[0]).norm() <= 1e-14);
        prop_assert!((twice[1] - v[1]).norm() <= 1e-14);
    }

    #[test]
    fn sigma_rhat_is_hermitian(
        theta in 0.0f64..std::f64::consts::PI,
        phi in 0.0f64..std::f64::consts::TAU,
        ure in -1.0f64..1.0, uim in -1.0f64..1.0,
        vre in -1.0f64..1.0, vim in -1.0f64..1.0,
    ) {
        let m = sigma_dot_rhat(theta, phi);
        let u = [num_complex::Complex64::new(ure, uim), num_complex::Complex64::new(0.3, -0.7)];
        let v = [num_complex::Complex64::new(vre, vim), num_complex::Complex64::new(-0.2, 0.4)];
        let mv = m.apply(v);
        let mu = m.apply(u);
        let lhs = u[0].conj() * mv[0] + u[1].conj() * mv[1];
        let rhs = mu[0].conj() * v[0] + mu[1].conj() * v[1];
        prop_assert!((lhs - rhs).norm() <= 1e-14);
    }

    #[test]
    fn d1_is_exact_on_quartics(
        coeffs in prop::array::uniform5(-3.0f64..3.0),
        x0 in -2.0f64..2.0,
        h in 0.05f64..0.5,
    ) {
        let samples: Vec<f64> =
            (0..5).map(|i| polyval(&coeffs, x0 + (i as f64 - 2.0) * h)).collect();
        let numeric = fd::d1(&samples, 2, 1, h);
        let exact = polyval(&polyder(&coeffs), x0);
        prop_assert!((numeric - exact).abs() <= 1e-9 * exact.abs().max(1.0));
    }

    #[test]
    fn d2_is_exact_on_quintics(
        coeffs in prop::array::uniform6(-3.0f64..3.0),
        x0 in -2.0f64..2.0,
        h in 0.05f64..0.5,
    ) {
        let samples: Vec<f64> =
            (0..5).map(|i| polyval(&coeffs, x0 + (i as f64 - 2.0) * h)).collect();
        let numeric = fd::d2(&samples, 2, 1, h);
        let exact = polyval(&polyder(&polyder(&coeffs)), x0);
        prop_assert!((numeric - exact).abs() <= 1e-8 * exact.abs().max(1.0));
    }

    #[test]
    fn energy_ignores_q_bitwise(
        k in 0.0f64..10.0,
        mass in 0.0f64..5.0,
        q1 in 0.01f64..100.0,
        q2 in 0.01f64..100.0,
        minus in any::<bool>(),
    ) {
        let branch = if minus { Branch::Minus } else { Branch::Plus };
        let a = PhysParams::new(1.0, 1.0, q1, mass).unwrap().energy(k, branch);
        let b = PhysParams::new(1.0, 1.0, q2, mass).unwrap().energy(k, branch);
        prop_assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn construction_is_deterministic(
        q in 0.1f64..10.0,
        k in 0.0f64..5.0,
        up in any::<bool>(),
        minus in any::<bool>(),
        mass in 0.0f64..3.0,
    ) {
        let spin = if up { Spin::Up } else { Spin::Down };
        let branch = if minus { Branch::Minus } else { Branch::Plus };
        let p = PhysParams::new(1.0, 1.0, q, mass).unwrap();
        let first = construct_1d(p, k, spin, branch, AmpMode::Exact).unwrap();
        let second = construct_1d(p, k, spin, branch, AmpMode::Exact).unwrap();
        prop_assert_eq!(first.energy().to_bits(), second.energy().to_bits());
        prop_assert_eq!(first.norm_constant().to_bits(), second.norm_constant().to_bits());
    }

    #[test]
    fn spin_angle_coefficients_are_normalized(
        jm in angular_numbers(),
        branch in orbital_branch(),
    ) {
        let chi = SpinAngle::new(jm, branch).unwrap();
        let sum = chi.coeff_up() * chi.coeff_up() + chi.coeff_dn() * chi.coeff_dn();
        prop_assert!((sum - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn spin_angle_eval_matches_its_expansion(
        jm in angular_numbers(),
        branch in orbital_branch(),
        theta in 0.05f64..3.09,
        phi in 0.0f64..std::f64::consts::TAU,
    ) {
        let chi = SpinAngle::new(jm, branch).unwrap();
        let direct = chi.eval(theta, phi).unwrap();
        let expanded = chi.expansion().eval(theta, phi).unwrap();
        prop_assert!((direct[0] - expanded[0]).norm() <= 1e-13);
        prop_assert!((direct[1] - expanded[1]).norm() <= 1e-13);
    }

    #[test]
    fn rejected_envelope_strengths_stay_rejected(q in -10.0f64..=0.0) {
        prop_assert!(PhysParams::new(1.0, 1.0, q, 0.0).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn quadrature_norm_is_one(q in 0.2f64..5.0, k in 0.0f64..3.0) {
        let p = PhysParams::new(1.0, 1.0, q, 0.0).unwrap();
        let state = construct_1d(p, k, Spin::Up, Branch::Plus, AmpMode::Exact).unwrap();
        let integral = state.quadrature_norm(2001).unwrap();
        prop_assert!((integral - 1.0).abs() <= 1e-8);
    }

    #[test]
    fn pt_symmetry_is_exact_on_random_spinors(
        decay in 0.5f64..4.0,
        seed in any::<u64>(),
    ) {
        let p = PhysParams::new(1.0, 1.0, 1.0, 0.0).unwrap();
        let grid = Grid1D::covering(&p, 257).unwrap();
        let field = random_envelope_spinor_1d(&grid, decay, seed);
        prop_assert!(pt_residual_1d(&p, &field, &grid) <= 1e-10);
    }
}
