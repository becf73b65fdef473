//! Cylindrical Bessel functions J_n and I_n for integer orders.
//!
//! J_n uses the ascending series for small arguments and Miller's backward
//! recurrence with the even-order normalization sum everywhere else; that
//! combination is stable for every order/argument combination in the
//! supported range. I_n has an all-positive ascending series, so the series
//! is used directly; there is no cancellation to defend against.

use crate::error::{Error, Result};

/// Largest supported order for all integer-order Bessel evaluations.
pub const MAX_ORDER: u32 = 64;
/// Largest supported argument for J_n.
pub const MAX_ARG_J: f64 = 1.0e4;
/// Overflow guard for I_n: I_0(700) is within f64 range, I_0(710) is not.
pub const MAX_ARG_I: f64 = 700.0;

/// Below this argument the plain ascending series for J_n keeps full
/// accuracy (worst-case cancellation is bounded by I_0(8) ~ 4e2).
const J_SERIES_SWITCH: f64 = 8.0;
const RESCALE_THRESHOLD: f64 = 1.0e100;
const RESCALE_FACTOR: f64 = 1.0e-100;

fn check_order(func: &'static str, order: u32) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::domain(func, format!("order {order} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

fn check_arg(func: &'static str, x: f64, max: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(func, format!("argument {x} must be finite and >= 0")));
    }
    if x > max {
        return Err(Error::overflow(func, format!("argument {x} exceeds {max}")));
    }
    Ok(())
}

/// J_order(x) for integer order 0..=64 and 0 <= x <= 1e4.
pub fn bessel_j(order: u32, x: f64) -> Result<f64> {
    check_order("bessel_j", order)?;
    check_arg("bessel_j", x, MAX_ARG_J)?;
    if x == 0.0 {
        return Ok(if order == 0 { 1.0 } else { 0.0 });
    }
    if x < J_SERIES_SWITCH {
        return Ok(j_ascending_series(order, x));
    }
    let seq = j_backward_recurrence(order, x);
    Ok(seq[order as usize])
}

/// J_0(x)..J_max_order(x) in one pass.
pub fn bessel_j_seq(max_order: u32, x: f64) -> Result<Vec<f64>> {
    check_order("bessel_j_seq", max_order)?;
    check_arg("bessel_j_seq", x, MAX_ARG_J)?;
    if x == 0.0 {
        let mut out = vec![0.0; max_order as usize + 1];
        out[0] = 1.0;
        return Ok(out);
    }
    if x < J_SERIES_SWITCH {
        return Ok((0..=max_order).map(|n| j_ascending_series(n, x)).collect());
    }
    Ok(j_backward_recurrence(max_order, x))
}

fn j_ascending_series(order: u32, x: f64) -> f64 {
    let mut term = 1.0_f64;
    for i in 1..=order {
        term *= x / 2.0 / i as f64;
    }
    let mut sum = term;
    for k in 1..200u32 {
        term *= -(x * x / 4.0) / (k as f64 * (k + order) as f64);
        sum += term;
        if term.abs() < sum.abs() * 1e-17 + 1e-300 {
            break;
        }
    }
    sum
}

/// Backward recurrence seeded far above both the order and the turning
/// point, normalized with 1 = J_0 + 2 J_2 + 2 J_4 + ...
fn j_backward_recurrence(max_order: u32, x: f64) -> Vec<f64> {
    let start = (x + 10.0 * x.cbrt() + 24.0).max(max_order as f64 + 24.0) as usize;
    let mut out = vec![0.0; max_order as usize + 1];
    let mut above2 = 0.0_f64; // J_{m+2} candidate
    let mut above1 = 1.0e-30_f64; // J_{m+1} candidate
    let mut norm = 0.0_f64;
    if (start + 1) % 2 == 0 {
        norm += 2.0 * above1;
    }
    let mut m = start as isize;
    while m >= 0 {
        let mu = m as usize;
        let current = (2.0 * (m as f64 + 1.0) / x) * above1 - above2;
        if mu <= max_order as usize {
            out[mu] = current;
        }
        if mu == 0 {
            norm += current;
        } else if mu % 2 == 0 {
            norm += 2.0 * current;
        }
        above2 = above1;
        above1 = current;
        if current.abs() > RESCALE_THRESHOLD {
            above1 *= RESCALE_FACTOR;
            above2 *= RESCALE_FACTOR;
            norm *= RESCALE_FACTOR;
            for v in out.iter_mut() {
                *v *= RESCALE_FACTOR;
            }
        }
        m -= 1;
    }
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

/// I_order(x) for integer order 0..=64 and 0 <= x <= 700.
pub fn bessel_i(order: u32, x: f64) -> Result<f64> {
    check_order("bessel_i", order)?;
    check_arg("bessel_i", x, MAX_ARG_I)?;
    if x == 0.0 {
        return Ok(if order == 0 { 1.0 } else { 0.0 });
    }
    let mut term = 1.0_f64;
    for i in 1..=order {
        term *= x / 2.0 / i as f64;
    }
    let mut sum = term;
    for k in 1..5000u32 {
        term *= (x * x / 4.0) / (k as f64 * (k + order) as f64);
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_and_recurrence_branches_agree_at_the_switch() {
        for order in [0u32, 1, 3, 9, 20] {
            let below = 7.999_f64;
            let series = j_ascending_series(order, below);
            let rec = j_backward_recurrence(order, below)[order as usize];
            assert!(
                (series - rec).abs() < 1e-13,
                "branch mismatch J_{order}({below}): {series} vs {rec}"
            );
        }
    }

    #[test]
    fn neumann_sum_is_one() {
        // 1 = J_0(x) + 2 sum_{k>=1} J_{2k}(x), evaluated from the public API
        for &x in &[0.5, 3.0, 11.0, 29.0] {
            let seq = bessel_j_seq(MAX_ORDER, x).unwrap();
            let mut s = seq[0];
            for k in (2..seq.len()).step_by(2) {
                s += 2.0 * seq[k];
            }
            assert!((s - 1.0).abs() < 1e-12, "Neumann sum at x={x}: {s}");
        }
    }

    #[test]
    fn i_is_monotone_in_argument() {
        let mut prev = bessel_i(2, 0.5).unwrap();
        for i in 1..40 {
            let x = 0.5 + i as f64 * 0.5;
            let cur = bessel_i(2, x).unwrap();
            assert!(cur > prev, "I_2 must increase, failed at x={x}");
            prev = cur;
        }
    }

    #[test]
    fn tiny_order_64_values_do_not_blow_up() {
        let v = bessel_j(64, 0.5).unwrap();
        assert!(v.abs() < 1e-100, "J_64(0.5) should underflow toward zero, got {v}");
        let v = bessel_i(64, 0.5).unwrap();
        assert!((0.0..1e-100).contains(&v));
    }
}
