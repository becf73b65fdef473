use std::ops::Range;

use crate::error::{Error, Result};
use crate::states::PhysParams;

/// Stencil half-width of the difference operators in [`super::fd`].
pub const MARGIN: usize = 2;

const MIN_NODES: usize = 65;

fn check_extent(func: &'static str, extent: f64) -> Result<()> {
    if !(extent.is_finite() && extent > 0.0) {
        return Err(Error::Grid(format!("{func}: extent must be positive, got {extent}")));
    }
    Ok(())
}

/// Uniform symmetric grid on `[-half_width, half_width]`.
///
/// Nodes are stored as integer offsets from the center times the spacing,
/// so `node(i) == -node(n - 1 - i)` holds bitwise. An odd node count keeps
/// a node exactly at the origin and suits composite Simpson weights.
#[derive(Debug, Clone)]
pub struct Grid1D {
    n: usize,
    h: f64,
    mid: usize,
}

impl Grid1D {
    pub fn new(half_width: f64, n: usize) -> Result<Self> {
        check_extent("Grid1D::new", half_width)?;
        if n < MIN_NODES || n % 2 == 0 {
            return Err(Error::Grid(format!(
                "Grid1D::new: need an odd node count of at least {MIN_NODES}, got {n}"
            )));
        }
        let mid = (n - 1) / 2;
        Ok(Self { n, h: half_width / mid as f64, mid })
    }

    /// Grid whose half-width is the truncation radius of the envelope.
    pub fn covering(params: &PhysParams, n: usize) -> Result<Self> {
        Self::new(params.truncation_radius(), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn node(&self, i: usize) -> f64 {
        (i as f64 - self.mid as f64) * self.h
    }

    /// Indices where the five-point stencils are applicable.
    pub fn interior(&self) -> Range<usize> {
        MARGIN..self.n - MARGIN
    }
}

/// Square tensor grid with the same symmetric node set on both axes.
///
/// Fields on the grid are stored row-major: index `iy * n + ix`.
#[derive(Debug, Clone)]
pub struct Grid2D {
    axis: Grid1D,
}

impl Grid2D {
    pub fn new(half_width: f64, n_per_side: usize) -> Result<Self> {
        Ok(Self { axis: Grid1D::new(half_width, n_per_side)? })
    }

    pub fn covering(params: &PhysParams, n_per_side: usize) -> Result<Self> {
        Self::new(params.truncation_radius(), n_per_side)
    }

    pub fn n(&self) -> usize {
        self.axis.n
    }

    pub fn h(&self) -> f64 {
        self.axis.h
    }

    pub fn node(&self, i: usize) -> f64 {
        self.axis.node(i)
    }

    pub fn idx(&self, ix: usize, iy: usize) -> usize {
        iy * self.axis.n + ix
    }

    pub fn interior(&self) -> Range<usize> {
        self.axis.interior()
    }
}

/// Uniform grid on `(0, radius]` with nodes `h, 2h, ..., radius`.
///
/// Keeping the origin off the grid lets centrifugal `1/r` coefficients be
/// evaluated at every node.
#[derive(Debug, Clone)]
pub struct RadialGrid {
    n: usize,
    h: f64,
}

impl RadialGrid {
    pub fn new(radius: f64, n: usize) -> Result<Self> {
        check_extent("RadialGrid::new", radius)?;
        if n < MIN_NODES {
            return Err(Error::Grid(format!(
                "RadialGrid::new: need at least {MIN_NODES} nodes, got {n}"
            )));
        }
        Ok(Self { n, h: radius / n as f64 })
    }

    pub fn covering(params: &PhysParams, n: usize) -> Result<Self> {
        Self::new(params.truncation_radius(), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn node(&self, i: usize) -> f64 {
        self.h * (i + 1) as f64
    }

    pub fn interior(&self) -> Range<usize> {
        MARGIN..self.n - MARGIN
    }
}
