//! Exact scalar arithmetic: big integers, big rationals, Laurent
//! polynomials in `q`, and reduced fractions of those polynomials.

mod qfraction;
mod qlaurent;

pub use num::BigInt;
pub use qfraction::QFraction;
pub use qlaurent::{rat_pow, BigRat, QLaurent};
