//! Laurent polynomials in the single symbol `q` with exact integer
//! coefficients.
//!
//! `QLaurent` is the scalar type of the whole crate: coefficients of the
//! multivariate ring, values of constant terms, and numerators and
//! denominators of [`QFraction`](super::QFraction). The representation is a
//! sparse exponent-to-coefficient map that never stores a zero coefficient,
//! so structural equality coincides with mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar used for point evaluation.
pub type BigRat = BigRational;

/// Raises a nonzero rational to an integer power, negative exponents allowed.
pub fn rat_pow(base: &BigRat, exp: i64) -> BigRat {
    if exp == 0 {
        return BigRat::one();
    }
    assert!(!base.is_zero(), "zero base with nonpositive exponent");
    let mut acc = BigRat::one();
    let mut sq = if exp > 0 { base.clone() } else { base.recip() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Sparse Laurent polynomial in `q` over the integers.
///
/// Invariants: no stored coefficient is zero, and exponent keys are kept in
/// ascending order by the underlying `BTreeMap`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        QLaurent { terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QLaurent::constant(1)
    }

    /// A constant polynomial `c`.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        QLaurent::monomial(c, 0)
    }

    /// The single term `c * q^exp`; the zero polynomial when `c` is 0.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        QLaurent { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = QLaurent::zero();
        for (e, c) in pairs {
            p.add_term(e, &c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies by `q^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        if shift == 0 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.checked_add(shift).expect("q exponent overflow"), c.clone()))
            .collect();
        QLaurent { terms }
    }

    /// Multiplies every coefficient by the integer `c`.
    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return QLaurent::zero();
        }
        let terms = self.terms.iter().map(|(e, k)| (*e, k * c)).collect();
        QLaurent { terms }
    }

    /// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Evaluates at a rational `q`; `q` must be nonzero if any exponent is
    /// negative.
    pub fn eval(&self, q: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            acc += BigRat::from(c.clone()) * rat_pow(q, *e);
        }
        acc
    }

    /// Exact division: returns `self / div` when the remainder is zero.
    ///
    /// Both operands are shifted to ordinary polynomials and divided by
    /// integer long division from the top degree; any noninteger quotient
    /// coefficient or nonzero remainder reports [`Error::NonExactDivision`].
    pub fn divexact(&self, div: &QLaurent) -> Result<QLaurent> {
        if div.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(QLaurent::zero());
        }
        let a_min = self.min_exp().expect("nonzero");
        let b_min = div.min_exp().expect("nonzero");
        let mut rem = self.shifted(-a_min);
        let b = div.shifted(-b_min);
        let b_deg = b.max_exp().expect("nonzero");
        let b_lead = b.coeff(b_deg);
        let mut quot = QLaurent::zero();
        while !rem.is_zero() {
            let r_deg = rem.max_exp().expect("nonzero");
            if r_deg < b_deg {
                return Err(Error::NonExactDivision);
            }
            let r_lead = rem.coeff(r_deg);
            let (c, leftover) = r_lead.div_rem(&b_lead);
            if !leftover.is_zero() {
                return Err(Error::NonExactDivision);
            }
            let step = QLaurent::monomial(c, r_deg - b_deg);
            rem -= &(&step * &b);
            quot += &step;
        }
        Ok(quot.shifted(a_min - b_min))
    }
}

impl From<i64> for QLaurent {
    fn from(c: i64) -> Self {
        QLaurent::constant(c)
    }
}

impl From<BigInt> for QLaurent {
    fn from(c: BigInt) -> Self {
        QLaurent::constant(c)
    }
}

impl Add<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl Mul<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.checked_add(*e2).expect("q exponent overflow");
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        QLaurent { terms }
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &QLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &(-c));
        }
    }
}

impl MulAssign<&QLaurent> for QLaurent {
    fn mul_assign(&mut self, rhs: &QLaurent) {
        *self = &*self * rhs;
    }
}

/// Renders in the canonical form used throughout reports and tests:
/// ascending exponents, `q^e` for general exponents, bare `q` for exponent 1,
/// plain integer for exponent 0, unit coefficients elided, terms joined by
/// ` + ` / ` - `. The zero polynomial prints as `0`.
impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}
