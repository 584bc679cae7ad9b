//! Dense floating-point kernels and exact rational linear algebra.

pub mod dense;
pub mod exact;
