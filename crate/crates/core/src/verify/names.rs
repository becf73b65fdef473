//! Stable identifiers for every check a report can contain. Downstream
//! consumers match on these strings, so they are part of the output
//! contract and never change casually.

pub const DISPERSION_IDENTITY: &str = "dispersion_identity";
pub const SCALED_CONSTANTS: &str = "scaled_constants";

pub const EIGEN_RESIDUAL_1D: &str = "eigen_residual_1d";
pub const EIGEN_RESIDUAL_1D_DERIVED: &str = "eigen_residual_1d_derived";
pub const ENVELOPE_ODE_1D: &str = "envelope_ode_1d";
pub const NORMALIZATION_QUADRATURE_1D: &str = "normalization_quadrature_1d";
pub const PT_SYMMETRY_1D: &str = "pt_symmetry_1d";
pub const SIMILARITY_TRANSFORM_1D: &str = "similarity_transform_1d";
pub const SIGMA_Z_COMMUTATOR_1D: &str = "sigma_z_commutator_1d";
pub const SPIN_PROJECTION_1D: &str = "spin_projection_1d";
pub const UNCERTAINTY_PRODUCT_1D: &str = "uncertainty_product_1d";

pub const EIGEN_RESIDUAL_2D: &str = "eigen_residual_2d";
pub const EIGEN_RESIDUAL_2D_AUTO: &str = "eigen_residual_2d_auto";
pub const ANGULAR_MOMENTUM_2D: &str = "angular_momentum_2d";
pub const RADIAL_ODE_2D: &str = "radial_ode_2d";
pub const NORMALIZATION_CLOSED_VS_QUADRATURE_2D: &str = "normalization_closed_vs_quadrature_2d";
pub const LOWER_AMPLITUDE_MODULUS_2D: &str = "lower_amplitude_modulus_2d";

pub const RADIAL_SYSTEM_3D_UPPER: &str = "radial_system_3d_upper";
pub const RADIAL_SYSTEM_3D_LOWER: &str = "radial_system_3d_lower";
pub const RADIAL_SYSTEM_3D_UPPER_DERIVED: &str = "radial_system_3d_upper_derived";
pub const RADIAL_SYSTEM_3D_LOWER_DERIVED: &str = "radial_system_3d_lower_derived";
pub const RADIAL_ODE_3D_UPPER: &str = "radial_ode_3d_upper";
pub const RADIAL_ODE_3D_LOWER: &str = "radial_ode_3d_lower";
pub const NORMALIZATION_CLOSED_VS_QUADRATURE_3D: &str = "normalization_closed_vs_quadrature_3d";
pub const KAPPA_CONSISTENCY_3D: &str = "kappa_consistency_3d";
pub const SIGMA_L_POINTWISE_3D: &str = "sigma_l_pointwise_3d";
pub const SIGMA_RHAT_FLIP_3D: &str = "sigma_rhat_flip_3d";
pub const SPIN_ANGLE_ORTHONORMALITY_3D: &str = "spin_angle_orthonormality_3d";
pub const AMPLITUDE_RATIO_3D: &str = "amplitude_ratio_3d";
pub const AMPLITUDE_RATIO_3D_DERIVED: &str = "amplitude_ratio_3d_derived";
pub const STRETCHED_SPINOR_COEFFICIENTS_3D: &str = "stretched_spinor_coefficients_3d";
