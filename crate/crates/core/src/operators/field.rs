use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::states::ClosedFormState;

use super::grid::{Grid1D, Grid2D};

/// Four-component field sampled on a [`Grid1D`], stored component-major.
#[derive(Debug, Clone)]
pub struct SpinorField1D {
    n: usize,
    data: Vec<Complex64>,
}

impl SpinorField1D {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Complex64::new(0.0, 0.0); 4 * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn comp(&self, c: usize) -> &[Complex64] {
        &self.data[c * self.n..(c + 1) * self.n]
    }

    pub fn comp_mut(&mut self, c: usize) -> &mut [Complex64] {
        &mut self.data[c * self.n..(c + 1) * self.n]
    }

    /// Root of the summed squared magnitude over interior nodes, weighted
    /// by the spacing so values track the continuum norm.
    pub fn norm_interior(&self, grid: &Grid1D) -> f64 {
        self.check(grid);
        let mut sum = 0.0;
        for c in 0..4 {
            let comp = self.comp(c);
            for i in grid.interior() {
                sum += comp[i].norm_sqr();
            }
        }
        (sum * grid.h()).sqrt()
    }

    pub fn diff_norm_interior(&self, other: &Self, grid: &Grid1D) -> f64 {
        self.check(grid);
        other.check(grid);
        let mut sum = 0.0;
        for c in 0..4 {
            let (a, b) = (self.comp(c), other.comp(c));
            for i in grid.interior() {
                sum += (a[i] - b[i]).norm_sqr();
            }
        }
        (sum * grid.h()).sqrt()
    }

    fn check(&self, grid: &Grid1D) {
        assert_eq!(self.n, grid.n(), "field sampled on a different grid");
    }
}

/// Two-component field on a [`Grid2D`]; each component is a row-major slab.
#[derive(Debug, Clone)]
pub struct SpinorField2D {
    n: usize,
    data: Vec<Complex64>,
}

impl SpinorField2D {
    pub fn zeros(n_per_side: usize) -> Self {
        Self { n: n_per_side, data: vec![Complex64::new(0.0, 0.0); 2 * n_per_side * n_per_side] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn comp(&self, c: usize) -> &[Complex64] {
        let slab = self.n * self.n;
        &self.data[c * slab..(c + 1) * slab]
    }

    pub fn comp_mut(&mut self, c: usize) -> &mut [Complex64] {
        let slab = self.n * self.n;
        &mut self.data[c * slab..(c + 1) * slab]
    }

    pub fn norm_interior(&self, grid: &Grid2D) -> f64 {
        self.check(grid);
        let n = self.n;
        let mut sum = 0.0;
        for c in 0..2 {
            let comp = self.comp(c);
            for iy in grid.interior() {
                for ix in grid.interior() {
                    sum += comp[iy * n + ix].norm_sqr();
                }
            }
        }
        (sum * grid.h() * grid.h()).sqrt()
    }

    pub fn diff_norm_interior(&self, other: &Self, grid: &Grid2D) -> f64 {
        self.check(grid);
        other.check(grid);
        let n = self.n;
        let mut sum = 0.0;
        for c in 0..2 {
            let (a, b) = (self.comp(c), other.comp(c));
            for iy in grid.interior() {
                for ix in grid.interior() {
                    sum += (a[iy * n + ix] - b[iy * n + ix]).norm_sqr();
                }
            }
        }
        (sum * grid.h() * grid.h()).sqrt()
    }

    fn check(&self, grid: &Grid2D) {
        assert_eq!(self.n, grid.n(), "field sampled on a different grid");
    }
}

pub fn sample_1d(state: &ClosedFormState, grid: &Grid1D) -> Result<SpinorField1D> {
    if state.dimension() != 1 {
        return Err(Error::State(format!(
            "sample_1d: state lives in {} dimensions",
            state.dimension()
        )));
    }
    let mut field = SpinorField1D::zeros(grid.n());
    for i in 0..grid.n() {
        let values = state.eval_1d(grid.node(i))?;
        for (c, v) in values.iter().enumerate() {
            field.comp_mut(c)[i] = *v;
        }
    }
    Ok(field)
}

pub fn sample_2d(state: &ClosedFormState, grid: &Grid2D) -> Result<SpinorField2D> {
    if state.dimension() != 2 {
        return Err(Error::State(format!(
            "sample_2d: state lives in {} dimensions",
            state.dimension()
        )));
    }
    let n = grid.n();
    let mut field = SpinorField2D::zeros(n);
    for iy in 0..n {
        let y = grid.node(iy);
        for ix in 0..n {
            let values = state.eval_2d(grid.node(ix), y)?;
            field.comp_mut(0)[iy * n + ix] = values[0];
            field.comp_mut(1)[iy * n + ix] = values[1];
        }
    }
    Ok(field)
}
