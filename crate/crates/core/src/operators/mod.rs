//! Finite-difference machinery: grids, sampled spinor fields, discretized
//! operators, and the relative residuals the verification layer reports.

pub mod fd;
mod field;
mod fit;
mod grid;
mod hamiltonian;
mod symmetry;

pub use field::{sample_1d, sample_2d, SpinorField1D, SpinorField2D};
pub use fit::{construct_2d_auto, fit_lower_amp_2d};
pub use grid::{Grid1D, Grid2D, RadialGrid, MARGIN};
pub use hamiltonian::{
    apply_h_1d, apply_h_2d, apply_h_free_1d, apply_jz_2d, apply_p_minus_2d, apply_p_plus_2d,
    eigen_residual_1d, eigen_residual_2d, jz_residual_2d, profile_ode_residual_1d,
    profile_ode_residual_2d, profile_ode_residual_3d, radial_system_residuals_3d,
};
pub use symmetry::{
    pt_residual_1d, random_envelope_spinor_1d, sigma_z_commutator_residual_1d,
    similarity_residual_1d,
};
