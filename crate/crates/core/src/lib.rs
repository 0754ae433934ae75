//! Numerical toolkit for local unitary (LU) equivalence of isotropic-like
//! quantum states.

pub mod scalar;

pub use scalar::Real;
pub mod probe;
