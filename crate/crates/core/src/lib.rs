//! Exact verification toolkit for Berger subalgebras of the split exceptional
//! Lie algebra g2* inside so(4,3), and for the holonomy of left-invariant
//! metrics with a parallel generic 3-form.
//!
//! All arithmetic is exact over Q(sqrt 2); there are no tolerances anywhere.

pub mod error;
pub mod scalar;
pub mod text;
pub mod linalg;
pub mod exterior;
pub mod g2star;
pub mod catalog;
pub mod berger;
pub mod repstruct;
pub mod liegeom;

pub use error::{Error, Result};
pub use scalar::{Rational, Scalar};

/// Dense matrix over Q(sqrt 2).
pub type Matrix = linalg::Matrix<Scalar>;
/// Subspace of Q(sqrt 2)^n in canonical echelon form.
pub type Subspace = linalg::Subspace<Scalar>;
/// Alternating form over Q(sqrt 2).
pub type KForm = exterior::KForm<Scalar>;
