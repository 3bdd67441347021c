//! Exact rational linear algebra, the signed-permutation monoid, and the
//! double-precision bridge used by the numeric index computations.

mod float;
mod matrix;
mod rational;
mod signed_perm;

pub use float::FloatMatrix;
pub use matrix::RationalMatrix;
pub use rational::{parse_rational, rat, rat_int, Rational};
pub use signed_perm::SignedPermMatrix;
