//! Fourth-order central differences on uniform grids.

use std::ops::{Add, Mul, Sub};

/// Anything the stencils can combine linearly: real or complex samples.
pub trait Sample:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
}

impl<T> Sample for T where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>
{
}

/// First derivative at `f[i]`, five-point stencil, error `h^4 f^(5) / 30`.
///
/// `stride` is the index step between neighbouring samples along the
/// differentiated axis; `i` must be at least two strides from either end.
#[inline]
pub fn d1<T: Sample>(f: &[T], i: usize, stride: usize, h: f64) -> T {
    let s = stride;
    (f[i - 2 * s] - f[i + 2 * s] + (f[i + s] - f[i - s]) * 8.0) * (1.0 / (12.0 * h))
}

/// Second derivative at `f[i]`, five-point stencil, error `h^4 f^(6) / 90`.
#[inline]
pub fn d2<T: Sample>(f: &[T], i: usize, stride: usize, h: f64) -> T {
    let s = stride;
    ((f[i + s] + f[i - s]) * 16.0 - f[i] * 30.0 - f[i + 2 * s] - f[i - 2 * s])
        * (1.0 / (12.0 * h * h))
}
