use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::states::{Branch, PhysParams};

/// One wavenumber on the mass shell: the energy, the two scaled momenta
/// that must coincide there, and the relative defect of
/// E^2 = (hbar k c)^2 + (m c^2)^2.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct DispersionRow {
    pub k: f64,
    pub energy: f64,
    pub alpha: f64,
    pub gamma: f64,
    pub defect: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DispersionTable {
    pub rows: Vec<DispersionRow>,
}

pub fn dispersion_table(
    params: &PhysParams,
    ks: &[f64],
    branch: Branch,
) -> Result<DispersionTable> {
    let mut rows = Vec::with_capacity(ks.len());
    for &k in ks {
        if !(k.is_finite() && k >= 0.0) {
            return Err(Error::Params(format!("dispersion_table: bad wavenumber {k}")));
        }
        let e = params.energy(k, branch);
        let kinetic = params.hbar() * k * params.c();
        let rest = params.mass() * params.c() * params.c();
        let shell = kinetic * kinetic + rest * rest;
        let scale = (e * e).max(shell).max(params.energy_scale().powi(2));
        let defect = (e * e - shell).abs() / scale;
        let alpha = k * params.length_scale();
        let gamma = (e * e - rest * rest).max(0.0).sqrt() / params.energy_scale();
        rows.push(DispersionRow { k, energy: e, alpha, gamma, defect });
    }
    Ok(DispersionTable { rows })
}

impl DispersionTable {
    /// Largest shell defect in the table.
    pub fn worst_defect(&self) -> f64 {
        self.rows.iter().map(|r| r.defect).fold(0.0, f64::max)
    }
}
