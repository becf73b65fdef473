//! Special functions needed by the wave-packet constructions: cylindrical
//! Bessel J_n and modified I_n, spherical Bessel j_n and its modified
//! companion f_n = sqrt(pi/2z) I_{n+1/2}(z), and spherical harmonics.
//!
//! Everything is evaluated to near machine precision over the argument
//! ranges the states actually produce; hard domain caps turn the remaining
//! ranges into explicit errors instead of silent inaccuracy.

mod bessel;
mod harmonics;
mod spherical;

pub use bessel::{bessel_i, bessel_j, bessel_j_seq};
pub use harmonics::spherical_harmonic;
pub use spherical::{modified_spherical_f, modified_spherical_f_seq, spherical_j, spherical_j_seq};
