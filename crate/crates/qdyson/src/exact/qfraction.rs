//! Exact fractions of Laurent polynomials in `q`.
//!
//! Closed forms with Pochhammer denominators are accumulated here and only
//! converted back to a Laurent polynomial by exact division at the end, so
//! every cancellation is verified rather than assumed.

use std::fmt;

use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{BigRat, QLaurent};

/// A ratio of two [`QLaurent`] values kept in a canonical reduced form.
///
/// After construction: the denominator is nonzero with minimum exponent 0 and
/// positive trailing coefficient, numerator and denominator share no
/// polynomial factor, and their integer contents are coprime. Powers of `q`
/// are carried entirely by the numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFraction {
    num: QLaurent,
    den: QLaurent,
}

/// Content-free part with the same sign convention as the gcd routine:
/// coefficients divided by their gcd, trailing coefficient positive.
fn primitive_part(p: &QLaurent) -> QLaurent {
    let mut c = p.content();
    if c.is_zero() {
        return QLaurent::zero();
    }
    let low = p.coeff(p.min_exp().expect("nonzero"));
    if low.is_negative() {
        c = -c;
    }
    p.divexact(&QLaurent::constant(c)).expect("content divides")
}

/// Pseudo-remainder of `f` by `g`: repeatedly scales `f` by the leading
/// coefficient of `g` so each elimination step stays over the integers.
/// Both inputs are ordinary polynomials (minimum exponent 0), `g` nonzero.
fn pseudo_rem(f: &QLaurent, g: &QLaurent) -> QLaurent {
    let g_deg = g.max_exp().expect("nonzero divisor");
    let g_lead = g.coeff(g_deg);
    let mut r = f.clone();
    while let Some(r_deg) = r.max_exp() {
        if r_deg < g_deg {
            break;
        }
        let r_lead = r.coeff(r_deg);
        let scaled = r.scaled(&g_lead);
        let step = &QLaurent::monomial(r_lead, r_deg - g_deg) * g;
        r = &scaled - &step;
    }
    r
}

/// Gcd of two nonzero ordinary polynomials, primitive with positive
/// trailing coefficient.
fn poly_gcd(a: &QLaurent, b: &QLaurent) -> QLaurent {
    let mut f = primitive_part(a);
    let mut g = primitive_part(b);
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g);
        f = g;
        g = primitive_part(&r);
    }
    f
}

impl QFraction {
    /// Builds and normalizes `num / den`; fails when `den` is zero.
    pub fn new(num: QLaurent, den: QLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(QFraction { num: QLaurent::zero(), den: QLaurent::one() });
        }
        let num_shift = num.min_exp().expect("nonzero");
        let den_shift = den.min_exp().expect("nonzero");
        let mut n = num.shifted(-num_shift);
        let mut d = den.shifted(-den_shift);
        let g = poly_gcd(&n, &d);
        if !g.is_one() {
            n = n.divexact(&g).expect("gcd divides numerator");
            d = d.divexact(&g).expect("gcd divides denominator");
        }
        let c = n.content().gcd(&d.content());
        if !c.is_one() {
            let c = QLaurent::constant(c);
            n = n.divexact(&c).expect("common content divides");
            d = d.divexact(&c).expect("common content divides");
        }
        if d.coeff(d.min_exp().expect("nonzero")).is_negative() {
            n = -&n;
            d = -&d;
        }
        Ok(QFraction { num: n.shifted(num_shift - den_shift), den: d })
    }

    /// Embeds a Laurent polynomial as a fraction with denominator 1.
    pub fn from_laurent(p: QLaurent) -> Self {
        QFraction { num: p, den: QLaurent::one() }
    }

    pub fn zero() -> Self {
        QFraction::from_laurent(QLaurent::zero())
    }

    pub fn one() -> Self {
        QFraction::from_laurent(QLaurent::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &QLaurent {
        &self.num
    }

    pub fn den(&self) -> &QLaurent {
        &self.den
    }

    pub fn add(&self, rhs: &QFraction) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        QFraction::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }

    pub fn sub(&self, rhs: &QFraction) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &QFraction) -> Self {
        QFraction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        QFraction { num: -&self.num, den: self.den.clone() }
    }

    /// Reciprocal; fails on the zero fraction.
    pub fn inv(&self) -> Result<Self> {
        QFraction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &QFraction) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Value equality by cross-multiplication, independent of representation.
    pub fn eq_value(&self, rhs: &QFraction) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }

    /// Converts to a Laurent polynomial; the denominator must divide exactly.
    pub fn to_laurent(&self) -> Result<QLaurent> {
        self.num.divexact(&self.den)
    }

    /// Evaluates at a rational `q`; fails when the denominator vanishes.
    pub fn eval(&self, q: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.eval(q) / d)
    }
}

impl fmt::Display for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn ql(pairs: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(pairs.iter().copied())
    }

    #[test]
    fn normalization_cancels_common_factor() {
        // (1 - q^2) / (1 - q) -> (1 + q) / 1
        let f = QFraction::new(ql(&[(0, 1), (2, -1)]), ql(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(f.num(), &ql(&[(0, 1), (1, 1)]));
        assert!(f.den().is_one());
    }

    #[test]
    fn normalization_moves_q_powers_to_numerator() {
        // q / q^2 -> q^-1 / 1
        let f = QFraction::new(QLaurent::monomial(1, 1), QLaurent::monomial(1, 2)).unwrap();
        assert_eq!(f.num(), &QLaurent::monomial(1, -1));
        assert!(f.den().is_one());
    }

    #[test]
    fn normalization_keeps_irreducible_denominator() {
        // 1 / (1 - q) is already in canonical form
        let f = QFraction::new(QLaurent::one(), ql(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(f.num(), &QLaurent::one());
        assert_eq!(f.den(), &ql(&[(0, 1), (1, -1)]));
    }

    #[test]
    fn normalization_fixes_denominator_sign() {
        // 1 / (q - 1) -> -1 / (1 - q)
        let f = QFraction::new(QLaurent::one(), ql(&[(0, -1), (1, 1)])).unwrap();
        assert_eq!(f.num(), &QLaurent::constant(-1));
        assert_eq!(f.den(), &ql(&[(0, 1), (1, -1)]));
    }

    #[test]
    fn normalization_reduces_integer_content() {
        // 2 / (2 - 2q) -> 1 / (1 - q)
        let f = QFraction::new(QLaurent::constant(2), ql(&[(0, 2), (1, -2)])).unwrap();
        assert_eq!(f.num(), &QLaurent::one());
        assert_eq!(f.den(), &ql(&[(0, 1), (1, -1)]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            QFraction::new(QLaurent::one(), QLaurent::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn arithmetic_matches_hand_computation() {
        // 1/(1-q) + q/(1 - q^-1): second term equals -q^2/(1-q), sum is
        // (1 - q^2)/(1 - q) = 1 + q.
        let a = QFraction::new(QLaurent::one(), ql(&[(0, 1), (1, -1)])).unwrap();
        let b = QFraction::new(QLaurent::monomial(1, 1), ql(&[(-1, -1), (0, 1)])).unwrap();
        let sum = a.add(&b);
        assert_eq!(sum, QFraction::from_laurent(ql(&[(0, 1), (1, 1)])));
    }

    #[test]
    fn value_equality_across_representations() {
        let a = QFraction::new(ql(&[(0, 1), (1, 1)]), QLaurent::one()).unwrap();
        let b = QFraction::new(ql(&[(0, 1), (2, -1)]), ql(&[(0, 1), (1, -1)])).unwrap();
        assert!(a.eq_value(&b));
        assert_eq!(a, b);
    }

    #[test]
    fn to_laurent_exact_and_inexact() {
        let ok = QFraction::new(ql(&[(0, 1), (2, -1)]), ql(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(ok.to_laurent().unwrap(), ql(&[(0, 1), (1, 1)]));
        let bad = QFraction::new(QLaurent::one(), ql(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(bad.to_laurent(), Err(Error::NonExactDivision));
    }

    #[test]
    fn eval_detects_pole() {
        let f = QFraction::new(QLaurent::one(), ql(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(f.eval(&BigRat::one()), Err(Error::PoleAtPoint));
        let half = BigRat::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.eval(&half).unwrap(), BigRat::from(BigInt::from(2)));
    }
}
