//! Exact (N,q)-analog homology.
//!
//! Coefficients live in `Z[q]` or its fraction field `Q(q)` where `q` is a
//! primitive `N`-th root of unity, `N` prime. The crate provides graded
//! N-complexes with amplitude homology, q-deformed chain complexes of
//! semi-simplicial sets, affine singular chains with the convex product, and
//! the homotopy operator that contracts a convex set onto a point.

pub mod affine;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod formats;
pub mod linalg;
pub mod ncomplex;
pub mod pairs;
pub mod sample;
pub mod simplicial;
pub mod verify;

pub use cyclotomic::{Cyclotomic, CyclotomicInt, CyclotomicRational, Order};
pub use error::{Error, Result};
pub use field::Field;

/// Matrices over `Q(q)`, the scalar used by every complex in the crate.
pub type Matrix = linalg::Matrix<CyclotomicRational>;
/// Matrices over `Q`, used for classical (`q = -1`) cross-checks.
pub type RationalMatrix = linalg::Matrix<num_rational::BigRational>;
