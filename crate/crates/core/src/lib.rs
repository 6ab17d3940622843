//! Contact and Frobenius structures on finite-dimensional real Lie algebras.
//!
//! Algebras are given by exact structure constants, possibly depending
//! polynomially on named parameters. The crate decides whether a given
//! left-invariant 1-form is contact (or exact symplectic in even dimension),
//! whether any such form exists, builds contactizations and symplectizations,
//! and runs the structural nonexistence tests.
//!
//! The core types are generic over a [`Coefficient`] ring; the aliases below
//! fix the exact symbolic scalar used by the deciders and the CLI.

pub mod catalog;
pub mod construct;
pub mod contact;
pub mod error;
pub mod format;
pub mod forms;
pub mod liealg;
pub mod linalg;
pub mod obstruct;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use forms::KForm;
pub use liealg::{Assignment, LieAlgebra};
pub use linalg::{ScaledVector, Subspace, Vector};
pub use scalar::{rat, Certainty, Coefficient, Polynomial, Rational, Scalar};

/// Lie algebra with polynomial-in-parameters structure constants.
pub type Algebra = LieAlgebra<Scalar>;
/// Lie algebra with rational structure constants.
pub type RationalAlgebra = LieAlgebra<Rational>;
/// Lie algebra with floating point structure constants (indicative only).
pub type FloatAlgebra = LieAlgebra<f64>;
/// Exterior form with symbolic coefficients.
pub type Form = KForm<Scalar>;
