//! Realness of left ideals in the free *-algebra.
//!
//! The free *-algebra over `x1..xg` is the algebra of noncommutative
//! polynomials in the letters `x1, x1*, .., xg, xg*` with the involution
//! that reverses words and stars each letter. A left ideal `I` is *real*
//! when every sum of hermitian squares `Σ aᵢ* aᵢ` lying in `I + I*` has all
//! of its `aᵢ` in `I`; for finitely generated ideals this is the same as the
//! left Nullstellensatz property `I = √I`.
//!
//! This crate decides realness exactly for monomial, linear, univariate
//! quadratic, analytic-plus-antianalytic and homogeneous principal ideals,
//! and falls back to a semidefinite feasibility problem (solved by
//! alternating projections) for everything else. Non-real verdicts always
//! carry a certificate `Σ dᵢ rᵢ* rᵢ = Σ (qⱼ pⱼ + pⱼ* qⱼ*)` that can be
//! checked independently with [`real::verify_nonreal_certificate`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
// dense numerics read most clearly with explicit index loops
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod eval;
pub mod factor;
pub mod gram;
pub mod ideal;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod real;
pub mod sdp;
pub mod word;

pub use error::{Error, Result};
pub use eval::MatrixPoint;
pub use gram::{GramMatrix, SosCertificate};
pub use ideal::{LeftGroebnerBasis, MonomialOrder};
pub use linalg::dense::Mat;
pub use poly::{Polynomial, Q};
pub use real::{real_test, verify_nonreal_certificate, NonRealCertificate, RealTestConfig, RealnessVerdict, Status};
pub use word::{Letter, Word};
