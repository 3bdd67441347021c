//! Exact computations with finite-dimensional Lie algebras and their
//! deformations: structure tensors over the rationals, the ghost Fock space
//! with its BRST coboundary, Chevalley-Eilenberg cohomology dimensions, the
//! Bianchi classification in dimension three, and heat-kernel-regularized
//! index invariants evaluated along deformation families.
//!
//! The exact stage works entirely over arbitrary-precision rationals; no
//! floating point enters rank, kernel, or cohomology results. A separate
//! numeric bridge ([`linalg::FloatMatrix`]) handles matrix exponentials,
//! operator norms, and symmetric eigenvalues for the index integrals.
//!
//! Grid evaluations (deformation scans, hypothesis checks) run in parallel
//! with rayon when the default `parallel` feature is enabled; disabling it
//! falls back to sequential evaluation with identical results.

pub mod algebra;
pub mod classify3;
pub mod dsl;
pub mod error;
pub mod ghost;
pub mod invariants;
pub mod linalg;
pub(crate) mod par;

pub use error::Error;
pub use linalg::{FloatMatrix, Rational, RationalMatrix, SignedPermMatrix};
