//! Position and momentum spreads of a localized state.
//!
//! The position moments come from composite Simpson on the truncation
//! interval. The momentum density is built by a direct Fourier transform
//! of each component on the same interval (uniform trapezoid weights: for
//! an integrand that decays like the envelope the trapezoid rule is
//! spectrally accurate), sampled on a momentum window centered on the
//! carrier where the momentum-space Gaussian lives.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::states::{ClosedFormState, MAX_GAUSS_ARG};

#[derive(Clone, Copy, Debug)]
pub struct UncertaintyReport {
    pub delta_z: f64,
    pub delta_p: f64,
    pub product: f64,
    pub target: f64,
    pub mean_z: f64,
    pub mean_p: f64,
    /// Relative mismatch between total probability measured in position
    /// space and in momentum space.
    pub parseval_defect: f64,
}

fn check_odd(func: &'static str, n: usize) -> Result<()> {
    if n < 65 || n % 2 == 0 {
        return Err(Error::Grid(format!("{func}: need an odd node count >= 65, got {n}")));
    }
    Ok(())
}

/// Simpson weights 1,4,2,...,4,1 times h/3 for an odd node count.
fn simpson_weight(i: usize, n: usize, h: f64) -> f64 {
    let w = if i == 0 || i == n - 1 {
        1.0
    } else if i % 2 == 1 {
        4.0
    } else {
        2.0
    };
    w * h / 3.0
}

pub fn uncertainty_product_1d(
    state: &ClosedFormState,
    n_z: usize,
    n_p: usize,
) -> Result<UncertaintyReport> {
    if state.dimension() != 1 {
        return Err(Error::State(format!(
            "uncertainty_product_1d: state lives in {} dimensions",
            state.dimension()
        )));
    }
    check_odd("uncertainty_product_1d", n_z)?;
    check_odd("uncertainty_product_1d", n_p)?;
    let params = state.params();
    let hbar = params.hbar();
    let half_width = params.truncation_radius();
    let hz = 2.0 * half_width / (n_z - 1) as f64;
    let mid_z = (n_z - 1) / 2;

    let mut samples = vec![[Complex64::new(0.0, 0.0); 4]; n_z];
    let mut total_z = 0.0;
    let mut first_z = 0.0;
    let mut second_z = 0.0;
    for (i, slot) in samples.iter_mut().enumerate() {
        let z = (i as f64 - mid_z as f64) * hz;
        *slot = state.eval_1d(z)?;
        let density: f64 = slot.iter().map(|v| v.norm_sqr()).sum();
        let w = simpson_weight(i, n_z, hz);
        total_z += w * density;
        first_z += w * density * z;
        second_z += w * density * z * z;
    }
    if total_z <= 0.0 {
        return Err(Error::Verify("uncertainty_product_1d: vanishing total probability".into()));
    }
    let mean_z = first_z / total_z;
    let var_z = second_z / total_z - mean_z * mean_z;

    // momentum window: the momentum-space envelope is a Gaussian of
    // variance hbar q / 2 centered on hbar k, so the same truncation
    // argument as in position space bounds the tail
    let p0 = hbar * state.k();
    let p_half = (2.0 * MAX_GAUSS_ARG * hbar * params.q()).sqrt();
    let hp = 2.0 * p_half / (n_p - 1) as f64;
    let mid_p = (n_p - 1) / 2;
    let norm = 1.0 / (2.0 * std::f64::consts::PI * hbar).sqrt();

    let mut total_p = 0.0;
    let mut first_p = 0.0;
    let mut second_p = 0.0;
    for j in 0..n_p {
        let p = p0 + (j as f64 - mid_p as f64) * hp;
        let mut transformed = [Complex64::new(0.0, 0.0); 4];
        for (i, values) in samples.iter().enumerate() {
            let z = (i as f64 - mid_z as f64) * hz;
            let phase = Complex64::new(0.0, -p * z / hbar).exp() * (norm * hz);
            for (t, v) in transformed.iter_mut().zip(values) {
                *t += v * phase;
            }
        }
        let density: f64 = transformed.iter().map(|v| v.norm_sqr()).sum();
        let w = simpson_weight(j, n_p, hp);
        total_p += w * density;
        first_p += w * density * p;
        second_p += w * density * p * p;
    }
    if total_p <= 0.0 {
        return Err(Error::Verify("uncertainty_product_1d: vanishing momentum density".into()));
    }
    let mean_p = first_p / total_p;
    let var_p = second_p / total_p - mean_p * mean_p;

    let delta_z = var_z.max(0.0).sqrt();
    let delta_p = var_p.max(0.0).sqrt();
    Ok(UncertaintyReport {
        delta_z,
        delta_p,
        product: delta_z * delta_p,
        target: hbar / 2.0,
        mean_z,
        mean_p,
        parseval_defect: (total_p - total_z).abs() / total_z,
    })
}
