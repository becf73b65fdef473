//! Closed-form localized eigenstates of a Dirac Hamiltonian whose momentum
//! is shifted by an imaginary linear term, H = c alpha . (p - i q r) + beta m c^2.
//! Every eigenstate carries a Gaussian envelope exp(-q r^2 / 2 hbar) on top
//! of the familiar free-particle structure, so the states are normalizable
//! while still satisfying H psi = E psi with real E.
//!
//! The crate builds those states in one, two (massless), and three
//! dimensions and verifies every checkable property numerically:
//! eigen-equation residuals on finite-difference grids, symmetry and
//! commutator identities, closed-form normalization constants against
//! quadrature, uncertainty products, and the dispersion relation.

pub mod error;
pub mod operators;
pub mod quadrature;
pub mod specfun;
pub mod spin_algebra;
pub mod states;
pub mod verify;

pub use error::{Error, Result};
