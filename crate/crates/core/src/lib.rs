//! Exact algebra over the Laurent ring Z[t, t^-1] for classifying immersed
//! Z-surfaces: hermitian and linking forms, isometries of the standard
//! boundary module, unitary units, and twisted homology of plumbed
//! 3-manifolds.

#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod cli;
pub mod forms;
pub mod homology;
pub mod intmat;
pub mod isometry;
pub mod laurent;
pub mod linking;
pub mod report;
pub mod units;

pub use intmat::IntMatrix;
pub use laurent::LaurentPoly;
