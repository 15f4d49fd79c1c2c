//! q-series building blocks: q-shifted factorials, Gaussian binomial
//! coefficients, and the classical summation identities they satisfy.
//!
//! Conventions. The q-shifted factorial of a ring element `z` is
//! `(z; q)_k = (1 - z)(1 - zq) ... (1 - z q^(k-1))` with `(z; q)_0 = 1`.
//! The Gaussian binomial is `[n k] = (q^(n-k+1); q)_k / (q; q)_k`, computed
//! here by the Pascal-style recurrence so no division is needed.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::exact::{QFraction, QLaurent};
use crate::xpoly::XPoly;

/// `(arg; q)_len` for a single-monomial `arg` in some `x` ring.
///
/// The argument must consist of exactly one term whose coefficient is a
/// single power of `q`; general polynomials are rejected because the
/// factored Pochhammer form is only used for monomial letters.
pub fn pochhammer(arg: &XPoly, len: i64) -> Result<XPoly> {
    if len < 0 {
        return Err(Error::RangeViolation(format!("pochhammer length {len} is negative")));
    }
    if arg.num_terms() != 1 {
        return Err(Error::NotAMonomial);
    }
    let (mono, coeff) = arg.terms().next().expect("one term");
    if coeff.num_terms() != 1 {
        return Err(Error::NotAMonomial);
    }
    let (qexp, c) = coeff.terms().next().expect("one term");
    let nvars = arg.nvars();
    let mut acc = XPoly::one(nvars);
    for t in 0..len {
        let shifted = XPoly::term(nvars, mono.clone(), QLaurent::monomial(c.clone(), qexp + t));
        let factor = &XPoly::one(nvars) - &shifted;
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// `(q^start; q)_len` as a Laurent polynomial in `q`; `start` may be
/// negative or zero. `len` must be nonnegative.
pub fn qpoch_q(start: i64, len: i64) -> QLaurent {
    assert!(len >= 0, "pochhammer length must be nonnegative");
    let mut acc = QLaurent::one();
    for t in 0..len {
        let factor = &QLaurent::one() - &QLaurent::monomial(1, start + t);
        acc *= &factor;
    }
    acc
}

/// `(q; q)_k`, the q-factorial.
pub fn qfact(k: i64) -> QLaurent {
    qpoch_q(1, k)
}

static QBINOM_MEMO: LazyLock<Mutex<HashMap<(i64, i64), QLaurent>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Gaussian binomial coefficient `[n k]` for `n >= 0`; zero outside
/// `0 <= k <= n`. Memoized across threads.
pub fn qbinom(n: i64, k: i64) -> QLaurent {
    assert!(n >= 0, "upper index must be nonnegative");
    if k < 0 || k > n {
        return QLaurent::zero();
    }
    if k == 0 || k == n {
        return QLaurent::one();
    }
    if let Some(hit) = QBINOM_MEMO.lock().expect("memo lock").get(&(n, k)) {
        return hit.clone();
    }
    // [n k] = [n-1 k-1] + q^k [n-1 k]
    let a = qbinom(n - 1, k - 1);
    let b = qbinom(n - 1, k);
    let value = &a + &b.shifted(k);
    QBINOM_MEMO.lock().expect("memo lock").insert((n, k), value.clone());
    value
}

/// Checks the finite q-binomial theorem for exponent `t`:
/// `(z; q)_t = sum_k q^(k(k-1)/2) [t k] (-z)^k`, as an exact identity in the
/// one-variable polynomial ring over `q`.
pub fn check_qbinom_theorem(t: i64) -> Result<bool> {
    if t < 0 {
        return Err(Error::RangeViolation(format!("exponent {t} is negative")));
    }
    let z = XPoly::var(1, 0);
    let lhs = pochhammer(&z, t)?;
    let mut rhs = XPoly::zero(1);
    for k in 0..=t {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coeff = qbinom(t, k).shifted(k * (k - 1) / 2).scaled(&sign.into());
        let zk = XPoly::term(1, crate::xpoly::Monomial::new(vec![k]), QLaurent::one());
        rhs += &zk.scaled(&coeff);
    }
    Ok(lhs == rhs)
}

/// Checks the partial-fraction summation
/// `sum_{k=0}^{t} q^(k(n-t)) / ((q^-k; q)_k (q; q)_(t-k)) = [n t]`
/// for `0 <= t <= n`, with every term kept as an exact fraction.
pub fn check_qbinom_sum(n: i64, t: i64) -> Result<bool> {
    if t < 0 || t > n {
        return Err(Error::RangeViolation(format!("need 0 <= t <= n, got t={t}, n={n}")));
    }
    let mut sum = QFraction::zero();
    for k in 0..=t {
        let num = QLaurent::monomial(1, k * (n - t));
        let den = &qpoch_q(-k, k) * &qfact(t - k);
        sum = sum.add(&QFraction::new(num, den)?);
    }
    Ok(sum.eq_value(&QFraction::from_laurent(qbinom(n, t))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn ql(pairs: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(pairs.iter().copied())
    }

    /// Counting oracle: `[n k]` is the generating function of partitions
    /// that fit in a `k x (n-k)` box, graded by size. Enumerates partitions
    /// with at most `k` parts, each part at most `n - k`.
    fn qbinom_by_box_counting(n: i64, k: i64) -> QLaurent {
        fn rec(max_part: i64, slots: i64, size: i64, acc: &mut QLaurent) {
            *acc += &QLaurent::monomial(1, size);
            if slots == 0 {
                return;
            }
            for p in 1..=max_part {
                rec(p, slots - 1, size + p, acc);
            }
        }
        let mut acc = QLaurent::zero();
        rec(n - k, k, 0, &mut acc);
        acc
    }

    #[test]
    fn qbinom_small_values() {
        assert_eq!(qbinom(0, 0), QLaurent::one());
        assert_eq!(qbinom(2, 1), ql(&[(0, 1), (1, 1)]));
        assert_eq!(qbinom(3, 2), ql(&[(0, 1), (1, 1), (2, 1)]));
        // [4 2] = 1 + q + 2q^2 + q^3 + q^4
        assert_eq!(qbinom(4, 2), ql(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]));
        assert_eq!(qbinom(3, 5), QLaurent::zero());
        assert_eq!(qbinom(3, -1), QLaurent::zero());
    }

    #[test]
    fn qbinom_matches_quotient_definition() {
        for n in 0..=8 {
            for k in 0..=n {
                let quotient = qpoch_q(n - k + 1, k).divexact(&qfact(k)).unwrap();
                assert_eq!(qbinom(n, k), quotient, "mismatch at ({n}, {k})");
            }
        }
    }

    #[test]
    fn qbinom_matches_box_counting_oracle() {
        for n in 0..=7 {
            for k in 0..=n {
                assert_eq!(qbinom(n, k), qbinom_by_box_counting(n, k), "({n}, {k})");
            }
        }
    }

    #[test]
    fn qbinom_at_q_one_is_binomial() {
        let one = crate::exact::BigRat::from(BigInt::from(1));
        let mut pascal = vec![1i64];
        for n in 0..=10i64 {
            for (k, &expect) in pascal.iter().enumerate() {
                let got = qbinom(n, k as i64).eval(&one);
                assert_eq!(got, crate::exact::BigRat::from(BigInt::from(expect)));
            }
            let mut next = vec![1i64];
            for w in pascal.windows(2) {
                next.push(w[0] + w[1]);
            }
            next.push(1);
            pascal = next;
        }
    }

    #[test]
    fn pochhammer_expansion() {
        // (z; q)_2 = 1 - (1 + q) z + q z^2
        let z = XPoly::var(1, 0);
        let p = pochhammer(&z, 2).unwrap();
        assert_eq!(p.coeff_of(&[0]).unwrap(), QLaurent::one());
        assert_eq!(p.coeff_of(&[1]).unwrap(), ql(&[(0, -1), (1, -1)]));
        assert_eq!(p.coeff_of(&[2]).unwrap(), QLaurent::monomial(1, 1));
        assert_eq!(pochhammer(&z, 0).unwrap(), XPoly::one(1));
    }

    #[test]
    fn pochhammer_rejects_non_monomials() {
        let z = XPoly::var(1, 0);
        let bad = &z + &XPoly::one(1);
        assert_eq!(pochhammer(&bad, 1), Err(Error::NotAMonomial));
        let mixed = XPoly::constant(1, ql(&[(0, 1), (1, 1)]));
        assert_eq!(pochhammer(&mixed, 1), Err(Error::NotAMonomial));
        assert!(matches!(pochhammer(&z, -1), Err(Error::RangeViolation(_))));
    }

    #[test]
    fn qpoch_with_negative_start() {
        // (q^-1; q)_2 = (1 - q^-1)(1 - 1) = 0
        assert!(qpoch_q(-1, 2).is_zero());
        // (q^-2; q)_2 = (1 - q^-2)(1 - q^-1)
        let expect = &(&QLaurent::one() - &QLaurent::monomial(1, -2))
            * &(&QLaurent::one() - &QLaurent::monomial(1, -1));
        assert_eq!(qpoch_q(-2, 2), expect);
        assert_eq!(qpoch_q(5, 0), QLaurent::one());
    }

    #[test]
    fn qbinom_theorem_small_exponents() {
        for t in 0..=6 {
            assert!(check_qbinom_theorem(t).unwrap(), "failed at t={t}");
        }
    }

    #[test]
    fn qbinom_sum_small_cases() {
        // hand check for (n, t) = (2, 1): 1/(1-q) + q/(1-q^-1) = 1 + q
        assert!(check_qbinom_sum(2, 1).unwrap());
        for n in 0..=5 {
            for t in 0..=n {
                assert!(check_qbinom_sum(n, t).unwrap(), "failed at ({n}, {t})");
            }
        }
        assert!(check_qbinom_sum(2, 3).is_err());
    }
}
