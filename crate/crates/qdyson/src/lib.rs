//! Exact computation and verification of generalized q-Dyson constant
//! terms.
//!
//! The crate expands, in exact arithmetic, constant terms of the form
//! `CT_x x^-v * H * prod_{i<j} (x_i/x_j; q)_{a_i} (q x_j/x_i; q)_{a_j}`
//! where `H` is a product of complete homogeneous symmetric polynomials on
//! geometric alphabets built from `a`. It provides:
//!
//! - [`exact`]: arbitrary-precision integers and rationals, Laurent
//!   polynomials in `q`, and reduced fractions thereof;
//! - [`xpoly`]: sparse multivariate Laurent polynomials over that scalar
//!   ring, with exact coefficient extraction and rational evaluation;
//! - [`qseries`]: q-shifted factorials and Gaussian binomials;
//! - [`partitions`]: compositions, partitions, and the orderings that
//!   govern vanishing;
//! - [`symfunc`]: geometric alphabets and `h_r` on them;
//! - [`dyson`]: the constant-term families `D` and `Dt`, their closed
//!   forms, the peeling recursion, and the partial-fraction splitting of
//!   the auxiliary function `F(a, w)`;
//! - [`verify`]: deterministic sweep suites checking every identity at
//!   desk scale.
//!
//! All equality checks are exact; there are no floating-point numbers and
//! no tolerances anywhere in the crate.

pub mod dyson;
pub mod error;
pub mod exact;
pub mod partitions;
pub mod qseries;
pub mod symfunc;
pub mod verify;
pub mod xpoly;

pub use error::{Error, Result};
pub use exact::{BigInt, BigRat, QFraction, QLaurent};
pub use partitions::{Partition, WeakComposition};
pub use xpoly::{Monomial, RationalPoint, XPoly};
