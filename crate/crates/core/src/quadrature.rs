//! Quadrature rules used by the normalization and symmetry checks:
//! composite Simpson on uniform grids, an adaptive Simpson driver, and a
//! Gauss-Legendre x uniform-phi product rule on the unit sphere.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Composite Simpson over [a, b] sampled at n uniformly spaced points.
/// n must be odd and at least 3.
pub fn composite_simpson(a: f64, b: f64, n: usize, mut f: impl FnMut(f64) -> f64) -> Result<f64> {
    check_simpson_grid(a, b, n)?;
    let h = (b - a) / (n - 1) as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n - 1 {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    Ok(acc * h / 3.0)
}

/// Composite Simpson for complex-valued integrands; same grid rules as the
/// real version.
pub fn composite_simpson_c64(
    a: f64,
    b: f64,
    n: usize,
    mut f: impl FnMut(f64) -> Complex64,
) -> Result<Complex64> {
    check_simpson_grid(a, b, n)?;
    let h = (b - a) / (n - 1) as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n - 1 {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    Ok(acc * h / 3.0)
}

fn check_simpson_grid(a: f64, b: f64, n: usize) -> Result<()> {
    if !a.is_finite() || !b.is_finite() || b <= a {
        return Err(Error::Grid(format!("bad interval [{a}, {b}]")));
    }
    if n < 3 || n % 2 == 0 {
        return Err(Error::Grid(format!("Simpson needs an odd point count >= 3, got {n}")));
    }
    Ok(())
}

/// Adaptive Simpson with a Richardson correction; `tol` is an absolute
/// target for the whole interval.
pub fn adaptive_simpson(a: f64, b: f64, tol: f64, f: impl Fn(f64) -> f64) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() || b <= a {
        return Err(Error::Grid(format!("bad interval [{a}, {b}]")));
    }
    if tol <= 0.0 || tol.is_nan() {
        return Err(Error::Grid(format!("bad tolerance {tol}")));
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson_panel(a, b, fa, fm, fb);
    Ok(adapt(&f, a, b, fa, fm, fb, whole, tol, 40))
}

fn simpson_panel(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson_panel(a, m, fa, flm, fm);
    let right = simpson_panel(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
        + adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 || n > 512 {
        return Err(Error::Grid(format!("Gauss-Legendre order {n} outside 1..=512")));
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let half = n.div_ceil(2);
    for i in 0..half {
        // Tricomi-style initial guess, then Newton
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (p2, d2) = legendre_and_derivative(n, x);
                dp = d2;
                x -= p2 / d2;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        weights[i] = w;
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_and_derivative(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    Ok((nodes, weights))
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Product rule on the unit sphere: Gauss-Legendre in cos(theta), uniform
/// trapezoid (periodic, hence spectrally accurate) in phi.
pub struct SphereQuadrature {
    thetas: Vec<f64>,
    theta_weights: Vec<f64>,
    phis: Vec<f64>,
    phi_weight: f64,
}

impl SphereQuadrature {
    pub fn new(n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_phi == 0 {
            return Err(Error::Grid("sphere rule needs at least one phi node".into()));
        }
        let (xs, ws) = gauss_legendre(n_theta)?;
        let thetas: Vec<f64> = xs.iter().map(|&x| x.acos()).collect();
        let phis: Vec<f64> = (0..n_phi)
            .map(|i| 2.0 * std::f64::consts::PI * i as f64 / n_phi as f64)
            .collect();
        Ok(Self {
            thetas,
            theta_weights: ws,
            phis,
            phi_weight: 2.0 * std::f64::consts::PI / n_phi as f64,
        })
    }

    /// Integral over the sphere of f(theta, phi) sin(theta) dtheta dphi.
    pub fn integrate(&self, mut f: impl FnMut(f64, f64) -> Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&th, &wt) in self.thetas.iter().zip(&self.theta_weights) {
            let mut ring = Complex64::new(0.0, 0.0);
            for &ph in &self.phis {
                ring += f(th, ph);
            }
            acc += wt * ring;
        }
        acc * self.phi_weight
    }
}
