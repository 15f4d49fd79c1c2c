//! Multivariate Laurent polynomials in `x_1, ..., x_n` with coefficients in
//! the Laurent ring over `q`.
//!
//! This ring hosts every brute-force constant-term computation: the defining
//! products are expanded here and coefficients are read off exactly. Terms
//! are kept in a sorted map from exponent vectors to nonzero coefficients,
//! so equality is structural and iteration order is canonical.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_pow, BigRat, QLaurent};

/// An exponent vector for `x_1, ..., x_n`; entries may be negative.
/// The derived ordering is lexicographic, which fixes term order in maps
/// and reports.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn new(exps: Vec<i64>) -> Self {
        Monomial(exps)
    }

    /// The identity monomial (all exponents zero).
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `x_i` as a monomial (zero-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial(exps)
    }

    pub fn exps(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        let exps = self
            .0
            .iter()
            .zip(&rhs.0)
            .map(|(a, b)| a.checked_add(*b).expect("x exponent overflow"))
            .collect();
        Monomial(exps)
    }

    /// Evaluates at nonzero rational values, one per variable.
    pub fn eval(&self, values: &[BigRat]) -> BigRat {
        debug_assert_eq!(self.0.len(), values.len());
        let mut acc = BigRat::one();
        for (e, v) in self.0.iter().zip(values) {
            if *e != 0 {
                acc *= rat_pow(v, *e);
            }
        }
        acc
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.0.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A point with a rational value for `q` and for each `x_i`; all coordinates
/// are nonzero so that Laurent monomials can be evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    q: BigRat,
    values: Vec<BigRat>,
}

impl RationalPoint {
    pub fn new(q: BigRat, values: Vec<BigRat>) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroCoordinate { index: 0 });
        }
        for (i, v) in values.iter().enumerate() {
            if v.is_zero() {
                return Err(Error::ZeroCoordinate { index: i + 1 });
            }
        }
        Ok(RationalPoint { q, values })
    }

    pub fn q(&self) -> &BigRat {
        &self.q
    }

    pub fn values(&self) -> &[BigRat] {
        &self.values
    }

    pub fn nvars(&self) -> usize {
        self.values.len()
    }
}

/// Sparse multivariate Laurent polynomial with [`QLaurent`] coefficients.
///
/// Invariants: every key has length `nvars` and no stored coefficient is
/// zero. The variable count is part of the ring identity; mixing counts is
/// an error, not a coercion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, QLaurent>,
}

impl XPoly {
    pub fn zero(nvars: usize) -> Self {
        XPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        XPoly::constant(nvars, QLaurent::one())
    }

    /// A constant polynomial with the given scalar coefficient.
    pub fn constant(nvars: usize, c: QLaurent) -> Self {
        XPoly::term(nvars, Monomial::unit(nvars), c)
    }

    /// The single term `c * x^m`; the zero polynomial when `c` is zero.
    pub fn term(nvars: usize, m: Monomial, c: QLaurent) -> Self {
        assert_eq!(m.len(), nvars, "monomial length must match variable count");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        XPoly { nvars, terms }
    }

    /// The variable `x_i` (zero-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        XPoly::term(nvars, Monomial::var(nvars, i), QLaurent::one())
    }

    /// The scaled variable `q^qexp * x_i`, the building block for alphabets
    /// of geometric letters.
    pub fn var_q(nvars: usize, i: usize, qexp: i64) -> Self {
        XPoly::term(nvars, Monomial::var(nvars, i), QLaurent::monomial(1, qexp))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(monomial, coefficient)` in lexicographic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QLaurent)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: &QLaurent) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    /// Sum of two polynomials in the same ring.
    pub fn checked_add(&self, rhs: &XPoly) -> Result<XPoly> {
        if self.nvars != rhs.nvars {
            return Err(Error::RingMismatch { left: self.nvars, right: rhs.nvars });
        }
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    /// Product of two polynomials in the same ring (schoolbook convolution
    /// with hashed accumulation; zeros are dropped eagerly).
    pub fn checked_mul(&self, rhs: &XPoly) -> Result<XPoly> {
        if self.nvars != rhs.nvars {
            return Err(Error::RingMismatch { left: self.nvars, right: rhs.nvars });
        }
        let mut acc: HashMap<Monomial, QLaurent> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                if c.is_zero() {
                    continue;
                }
                use std::collections::hash_map::Entry;
                match acc.entry(m) {
                    Entry::Vacant(slot) => {
                        slot.insert(c);
                    }
                    Entry::Occupied(mut slot) => {
                        *slot.get_mut() += &c;
                        if slot.get().is_zero() {
                            slot.remove();
                        }
                    }
                }
            }
        }
        let terms: BTreeMap<Monomial, QLaurent> = acc.into_iter().collect();
        Ok(XPoly { nvars: self.nvars, terms })
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scaled(&self, c: &QLaurent) -> XPoly {
        if c.is_zero() {
            return XPoly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        XPoly { nvars: self.nvars, terms }
    }

    /// Coefficient of `x^exps` as a scalar; the exponent vector must match
    /// the variable count.
    pub fn coeff_of(&self, exps: &[i64]) -> Result<QLaurent> {
        if exps.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: exps.len() });
        }
        let key = Monomial::new(exps.to_vec());
        Ok(self.terms.get(&key).cloned().unwrap_or_else(QLaurent::zero))
    }

    /// Coefficient of `x_1^0 ... x_n^0`, the constant term in all `x_i`.
    pub fn constant_term(&self) -> QLaurent {
        self.coeff_of(&vec![0; self.nvars]).expect("matching dimension")
    }

    /// Evaluates at a rational point with one value per variable.
    pub fn eval_at(&self, pt: &RationalPoint) -> Result<BigRat> {
        if pt.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: pt.nvars() });
        }
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            acc += c.eval(pt.q()) * m.eval(pt.values());
        }
        Ok(acc)
    }

    /// True when every term has the given total degree in the `x` variables.
    pub fn is_homogeneous_of_degree(&self, degree: i64) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self.checked_add(&-rhs).expect("ring mismatch in subtraction")
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        XPoly { nvars: self.nvars, terms }
    }
}

impl AddAssign<&XPoly> for XPoly {
    fn add_assign(&mut self, rhs: &XPoly) {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch in addition");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let coeff = c.to_string();
            let wrapped = if c.num_terms() > 1 || coeff.starts_with('-') {
                format!("({coeff})")
            } else {
                coeff
            };
            match (c.is_one(), m.is_unit()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{m}")?,
                (false, true) => write!(f, "{wrapped}")?,
                (false, false) => write!(f, "{wrapped}*{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRat {
        BigRat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = XPoly::one(2);
        let b = XPoly::one(3);
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch { left: 2, right: 3 }));
        assert_eq!(a.checked_mul(&b), Err(Error::RingMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn product_with_cancellation() {
        // (x1 - x2)(x1 + x2) = x1^2 - x2^2
        let x1 = XPoly::var(2, 0);
        let x2 = XPoly::var(2, 1);
        let p = &(&x1 - &x2) * &(&x1 + &x2);
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff_of(&[2, 0]).unwrap(), QLaurent::one());
        assert_eq!(p.coeff_of(&[0, 2]).unwrap(), QLaurent::constant(-1));
        assert_eq!(p.coeff_of(&[1, 1]).unwrap(), QLaurent::zero());
    }

    #[test]
    fn laurent_monomials_in_x() {
        // (1 - x1/x2)(1 - x2/x1) = 2 - x1/x2 - x2/x1
        let m = XPoly::term(2, Monomial::new(vec![1, -1]), QLaurent::one());
        let inv = XPoly::term(2, Monomial::new(vec![-1, 1]), QLaurent::one());
        let one = XPoly::one(2);
        let p = &(&one - &m) * &(&one - &inv);
        assert_eq!(p.constant_term(), QLaurent::constant(2));
        assert_eq!(p.coeff_of(&[1, -1]).unwrap(), QLaurent::constant(-1));
    }

    #[test]
    fn coeff_of_checks_dimension() {
        let p = XPoly::one(2);
        assert_eq!(
            p.coeff_of(&[0]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn eval_is_ring_homomorphism_at_a_point() {
        let x1 = XPoly::var(2, 0);
        let x2 = XPoly::var(2, 1);
        let q = XPoly::constant(2, QLaurent::monomial(1, 1));
        let p = &(&x1 + &q) * &(&x2 - &x1);
        let pt = RationalPoint::new(rat(1, 2), vec![rat(2, 1), rat(3, 1)]).unwrap();
        let lhs = p.eval_at(&pt).unwrap();
        let a = &x1.eval_at(&pt).unwrap() + &q.eval_at(&pt).unwrap();
        let b = &x2.eval_at(&pt).unwrap() - &x1.eval_at(&pt).unwrap();
        assert_eq!(lhs, a * b);
    }

    #[test]
    fn rational_point_rejects_zero_coordinates() {
        assert_eq!(
            RationalPoint::new(rat(0, 1), vec![rat(1, 1)]),
            Err(Error::ZeroCoordinate { index: 0 })
        );
        assert_eq!(
            RationalPoint::new(rat(1, 2), vec![rat(1, 1), rat(0, 1)]),
            Err(Error::ZeroCoordinate { index: 2 })
        );
    }

    #[test]
    fn zero_variable_ring() {
        let one = XPoly::one(0);
        let p = &one + &one;
        assert_eq!(p.constant_term(), QLaurent::constant(2));
        let pt = RationalPoint::new(rat(2, 1), vec![]).unwrap();
        assert_eq!(p.eval_at(&pt).unwrap(), rat(2, 1));
    }

    #[test]
    fn display_examples() {
        let x1 = XPoly::var(2, 0);
        let p = &XPoly::constant(2, QLaurent::from_terms([(0i64, 1i64), (1, -1)])) * &x1;
        assert_eq!(p.to_string(), "(1 - q)*x1");
        let m = XPoly::term(2, Monomial::new(vec![1, -2]), QLaurent::monomial(1, 1));
        assert_eq!(m.to_string(), "q*x1*x2^-2");
        assert_eq!(XPoly::zero(1).to_string(), "0");
    }

    #[test]
    fn homogeneity_check() {
        let x1 = XPoly::var(2, 0);
        let x2 = XPoly::var(2, 1);
        let p = &x1 * &x2;
        assert!(p.is_homogeneous_of_degree(2));
        assert!(!(&p + &x1).is_homogeneous_of_degree(2));
    }
}
