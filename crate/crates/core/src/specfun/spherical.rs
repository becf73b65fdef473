//! Spherical Bessel functions j_n and their modified first-kind companions
//! f_n(z) = sqrt(pi/2z) I_{n+1/2}(z).
//!
//! j_n: ascending series near the origin, upward recurrence from the trig
//! closed forms when the argument is safely above the order (oscillatory
//! regime), backward recurrence normalized against j_0/j_1 otherwise.
//! f_n: per-order ascending series; every term is positive so the series is
//! accurate wherever it does not overflow.

use crate::error::{Error, Result};
use crate::specfun::bessel::MAX_ORDER;

/// Largest supported argument for j_n.
pub const MAX_ARG_SPH_J: f64 = 1.0e4;
/// Overflow guard for f_n, matching the cylindrical I_n guard.
pub const MAX_ARG_SPH_F: f64 = 700.0;

const SERIES_SWITCH: f64 = 0.5;

fn check_order(func: &'static str, order: u32) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::domain(func, format!("order {order} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

/// j_order(x) for integer order 0..=64 and 0 <= x <= 1e4.
pub fn spherical_j(order: u32, x: f64) -> Result<f64> {
    check_order("spherical_j", order)?;
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain("spherical_j", format!("argument {x} must be finite and >= 0")));
    }
    if x > MAX_ARG_SPH_J {
        return Err(Error::overflow("spherical_j", format!("argument {x} exceeds {MAX_ARG_SPH_J}")));
    }
    if x == 0.0 {
        return Ok(if order == 0 { 1.0 } else { 0.0 });
    }
    if x < SERIES_SWITCH {
        return Ok(sph_j_series(order, x));
    }
    match order {
        0 => Ok(x.sin() / x),
        1 => Ok(x.sin() / (x * x) - x.cos() / x),
        _ => {
            if x >= order as f64 + 2.0 {
                Ok(sph_j_upward(order, x))
            } else {
                Ok(sph_j_downward(order, x))
            }
        }
    }
}

/// j_0(x)..j_max_order(x) in one pass.
pub fn spherical_j_seq(max_order: u32, x: f64) -> Result<Vec<f64>> {
    check_order("spherical_j_seq", max_order)?;
    (0..=max_order).map(|n| spherical_j(n, x)).collect()
}

fn sph_j_series(order: u32, x: f64) -> f64 {
    // x^n / (2n+1)!! * sum_k (-x^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1))
    let mut lead = 1.0_f64;
    for i in 1..=order {
        lead *= x / (2.0 * i as f64 + 1.0);
    }
    // the loop above accumulates x^n / (3*5*...*(2n+1))
    let mut term = lead;
    let mut sum = term;
    for k in 1..60u32 {
        term *= -(x * x / 2.0) / (k as f64 * (2.0 * (order + k) as f64 + 1.0));
        sum += term;
        if term.abs() < sum.abs() * 1e-17 + 1e-300 {
            break;
        }
    }
    sum
}

fn sph_j_upward(order: u32, x: f64) -> f64 {
    let mut below = x.sin() / x;
    let mut cur = x.sin() / (x * x) - x.cos() / x;
    for n in 1..order {
        let next = (2.0 * n as f64 + 1.0) / x * cur - below;
        below = cur;
        cur = next;
    }
    cur
}

fn sph_j_downward(order: u32, x: f64) -> f64 {
    // Miller's algorithm: the recurrence only damps the seed error once the
    // index is past the turning point near x, so start well above both.
    let start = ((x + 10.0 * x.cbrt() + 24.0) as usize).max(order as usize + 24);
    let mut above1 = 0.0_f64;
    let mut cur = 1.0e-30_f64;
    let mut at_order = 0.0_f64;
    let mut at_one = 0.0_f64;
    let mut at_zero = 0.0_f64;
    for m in (0..=start).rev() {
        let below = (2.0 * m as f64 + 1.0) / x * cur - above1;
        if m == order as usize {
            at_order = cur;
        }
        if m == 1 {
            at_one = cur;
        }
        if m == 0 {
            at_zero = cur;
        }
        above1 = cur;
        cur = below;
        if cur.abs() > 1.0e100 {
            cur *= 1.0e-100;
            above1 *= 1.0e-100;
            at_order *= 1.0e-100;
            at_one *= 1.0e-100;
            at_zero *= 1.0e-100;
        }
    }
    let j0 = x.sin() / x;
    let j1 = x.sin() / (x * x) - x.cos() / x;
    let (reference, candidate) = if j0.abs() >= j1.abs() {
        (j0, at_zero)
    } else {
        (j1, at_one)
    };
    at_order * (reference / candidate)
}

/// f_order(z) = sqrt(pi/2z) I_{order+1/2}(z) for 0 < z <= 700.
pub fn modified_spherical_f(order: u32, z: f64) -> Result<f64> {
    check_order("modified_spherical_f", order)?;
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::domain(
            "modified_spherical_f",
            format!("argument {z} must be finite and > 0"),
        ));
    }
    if z > MAX_ARG_SPH_F {
        return Err(Error::overflow(
            "modified_spherical_f",
            format!("argument {z} exceeds {MAX_ARG_SPH_F}"),
        ));
    }
    // z^n / (2n+1)!! * sum_k (z^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1))
    let mut term = 1.0_f64;
    for i in 1..=order {
        term *= z / (2.0 * i as f64 + 1.0);
    }
    let mut sum = term;
    for k in 1..5000u32 {
        term *= (z * z / 2.0) / (k as f64 * (2.0 * (order + k) as f64 + 1.0));
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    Ok(sum)
}

/// f_0(z)..f_max_order(z).
pub fn modified_spherical_f_seq(max_order: u32, z: f64) -> Result<Vec<f64>> {
    (0..=max_order).map(|n| modified_spherical_f(n, z)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_and_closed_form_agree_at_the_switch() {
        for order in [0u32, 1, 2, 5] {
            let x = 0.4999;
            let series = sph_j_series(order, x);
            let other = match order {
                0 => x.sin() / x,
                1 => x.sin() / (x * x) - x.cos() / x,
                _ => sph_j_downward(order, x),
            };
            assert!(
                (series - other).abs() < 1e-15,
                "switch mismatch j_{order}({x}): {series} vs {other}"
            );
        }
    }

    #[test]
    fn upward_and_downward_branches_agree_in_the_overlap() {
        for order in [2u32, 3, 6, 11] {
            for &x in &[order as f64 + 2.0, order as f64 + 5.0, 40.0] {
                let up = sph_j_upward(order, x);
                let down = sph_j_downward(order, x);
                assert!(
                    (up - down).abs() < 1e-13 * up.abs().max(1.0),
                    "branch mismatch j_{order}({x}): {up} vs {down}"
                );
            }
        }
    }

    #[test]
    fn modified_f_is_positive_and_increasing() {
        for order in [0u32, 1, 4] {
            let mut prev = 0.0;
            for i in 1..30 {
                let z = i as f64 * 0.7;
                let v = modified_spherical_f(order, z).unwrap();
                assert!(v > 0.0);
                if i > 3 {
                    assert!(v > prev, "f_{order} must grow with z, failed at {z}");
                }
                prev = v;
            }
        }
    }
}
