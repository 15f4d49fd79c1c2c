//! Generalized q-Dyson constant terms.
//!
//! For a composition `a = (a_1, ..., a_n)` the Dyson kernel is
//! `prod_{1 <= i < j <= n} (x_i/x_j; q)_{a_i} (q x_j/x_i; q)_{a_j}`, a
//! Laurent polynomial of total degree 0. Two families of constant terms are
//! computed on top of it, both extracting the coefficient of `x^v` from the
//! kernel times a product of complete homogeneous symmetric polynomials:
//!
//! - `D(v, lambda, a)` attaches `h_{lambda_i}` on the augmented alphabet for
//!   block `i` (one factor per variable, `lambda` padded to length `n`);
//! - `Dt(v, lambda, a)` attaches `h_{lambda_i}` on the plain alphabet of `a`
//!   for every part of `lambda` (any number of parts).
//!
//! Alongside the brute-force expansions this module provides the product
//! closed form for `D` on the diagonal `v = lambda`, the single-row closed
//! form for `Dt`, and a peeling recursion for `D` that removes leading
//! variables while the leading part dominates the remaining exponents.

pub mod split;

use crate::error::{Error, Result};
use crate::exact::{QFraction, QLaurent};
use crate::partitions::{Partition, WeakComposition};
use crate::qseries::{qbinom, qfact, qpoch_q};
use crate::symfunc::{hcomplete, Alphabet};
use crate::xpoly::XPoly;

/// The Dyson kernel `prod_{i<j} (x_i/x_j; q)_{a_i} (q x_j/x_i; q)_{a_j}`
/// in the `n`-variable Laurent ring.
pub fn dyson_product(a: &WeakComposition) -> XPoly {
    let n = a.len();
    let mut acc = XPoly::one(n);
    for i in 0..n {
        for j in (i + 1)..n {
            acc = &acc * &ratio_poch(n, i, j, 0, a.get(i));
            acc = &acc * &ratio_poch(n, j, i, 1, a.get(j));
        }
    }
    acc
}

/// `(q^qshift * x_num / x_den; q)_len` in the `n`-variable ring.
fn ratio_poch(n: usize, num: usize, den: usize, qshift: i64, len: i64) -> XPoly {
    let mut exps = vec![0i64; n];
    exps[num] = 1;
    exps[den] = -1;
    let mono = crate::xpoly::Monomial::new(exps);
    let mut acc = XPoly::one(n);
    for t in 0..len {
        let term = XPoly::term(n, mono.clone(), QLaurent::monomial(1, qshift + t));
        acc = &acc * &(&XPoly::one(n) - &term);
    }
    acc
}

/// Product side of the plain q-Dyson identity:
/// `prod_i [a_i + ... + a_n choose a_i]`, which telescopes to
/// `(q; q)_{|a|} / prod_i (q; q)_{a_i}`.
pub fn qdyson_rhs(a: &WeakComposition) -> QLaurent {
    let mut acc = QLaurent::one();
    for i in 0..a.len() {
        acc *= &qbinom(a.suffix_sum(i), a.get(i));
    }
    acc
}

/// Same value computed from the factorial quotient, with the division
/// checked to be exact.
pub fn qdyson_rhs_by_quotient(a: &WeakComposition) -> Result<QLaurent> {
    let mut den = QLaurent::one();
    for &ai in a.parts() {
        den *= &qfact(ai);
    }
    qfact(a.size()).divexact(&den)
}

/// Checks the plain q-Dyson identity for `a` by full expansion.
pub fn check_qdyson(a: &WeakComposition) -> bool {
    dyson_product(a).constant_term() == qdyson_rhs(a)
}

/// The polynomial whose coefficients are all values `D(v, ., a)` at once:
/// `prod_i h_{lambda_i}(augmented alphabet i) * kernel`. `lambda` must fit
/// into `n` parts.
pub fn d_product_poly(lambda: &Partition, a: &WeakComposition) -> Result<XPoly> {
    let n = a.len();
    let lambda = lambda.padded(n)?;
    let mut acc = dyson_product(a);
    for i in 0..n {
        let alphabet = Alphabet::augmented(i, a)?;
        acc = &acc * &hcomplete(lambda.part(i), &alphabet);
    }
    Ok(acc)
}

/// The analogous master polynomial for `Dt`:
/// `prod_parts h_{lambda_i}(plain alphabet) * kernel`.
pub fn dt_product_poly(lambda: &Partition, a: &WeakComposition) -> XPoly {
    let alphabet = Alphabet::plain(a);
    let mut acc = dyson_product(a);
    for i in 0..lambda.len() {
        acc = &acc * &hcomplete(lambda.part(i), &alphabet);
    }
    acc
}

fn check_vlen(v: &[i64], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.len() });
    }
    Ok(())
}

/// `D(v, lambda, a)` by brute-force expansion: the coefficient of `x^v` in
/// the master polynomial, or 0 when `|v| != |lambda|`.
pub fn d_brute(v: &[i64], lambda: &Partition, a: &WeakComposition) -> Result<QLaurent> {
    check_vlen(v, a.len())?;
    let lambda = lambda.padded(a.len())?;
    if v.iter().sum::<i64>() != lambda.size() {
        return Ok(QLaurent::zero());
    }
    d_product_poly(&lambda, a)?.coeff_of(v)
}

/// `Dt(v, lambda, a)` by brute-force expansion; 0 when `|v| != |lambda|`.
pub fn dt_brute(v: &[i64], lambda: &Partition, a: &WeakComposition) -> Result<QLaurent> {
    check_vlen(v, a.len())?;
    if v.iter().sum::<i64>() != lambda.size() {
        return Ok(QLaurent::zero());
    }
    dt_product_poly(lambda, a).coeff_of(v)
}

/// Closed form for the diagonal value `D(lambda, lambda, a)`:
/// `q^(-|lambda|) prod_i [a_i + ... + a_n + lambda_i choose a_i]`.
pub fn d_closed(lambda: &Partition, a: &WeakComposition) -> Result<QLaurent> {
    let n = a.len();
    let lambda = lambda.padded(n)?;
    let mut acc = QLaurent::one();
    for i in 0..n {
        acc *= &qbinom(a.suffix_sum(i) + lambda.part(i), a.get(i));
    }
    Ok(acc.shifted(-lambda.size()))
}

/// Closed form for `Dt(v, (r), a)` with a single-row shape, `r >= 1`.
///
/// When `v = (0^(k-1), r, 0^(n-k))` the value is
/// `q^(a_(k+1) + ... + a_n) (1 - q^(a_k)) (q^(|a|+1); q)_(r-1)
///  / (q^(|a| - a_k + 1); q)_r * prod_i [a_i + ... + a_n choose a_i]`,
/// and 0 for any other `v` with `|v| = r`. The division is performed
/// exactly; a nonzero remainder is reported as an error.
pub fn dt_single_row(v: &[i64], r: i64, a: &WeakComposition) -> Result<QLaurent> {
    check_vlen(v, a.len())?;
    if r < 1 {
        return Err(Error::RangeViolation(format!("single-row part {r} must be positive")));
    }
    if v.iter().any(|&vi| vi < 0) || v.iter().sum::<i64>() != r {
        return Err(Error::BadShape(format!(
            "v must be a weak composition of {r}, got {}",
            crate::partitions::fmt_vec(v)
        )));
    }
    let k = match single_nonzero_index(v) {
        Some(k) => k,
        None => return Ok(QLaurent::zero()),
    };
    let ak = a.get(k);
    let total = a.size();
    let mut num = QLaurent::monomial(1, a.suffix_sum(k + 1));
    num *= &(&QLaurent::one() - &QLaurent::monomial(1, ak));
    num *= &qpoch_q(total + 1, r - 1);
    num *= &qdyson_rhs(a);
    let den = qpoch_q(total - ak + 1, r);
    QFraction::new(num, den)?.to_laurent()
}

/// Index of the unique nonzero entry, or `None` when several are nonzero.
/// The caller guarantees at least one nonzero entry.
fn single_nonzero_index(v: &[i64]) -> Option<usize> {
    let mut found = None;
    for (i, &vi) in v.iter().enumerate() {
        if vi != 0 {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

/// `D(v, lambda, a)` by the peeling recursion.
///
/// While the instance is nonempty and the leading part `lambda_1` dominates
/// every exponent (`lambda_1 >= max v_i`): the value is 0 if
/// `lambda_1 > v_1`, and otherwise equals
/// `q^(-lambda_1) [|a| + lambda_1 choose a_1]` times the value with the
/// first entry of `v`, `lambda`, and `a` removed. The empty instance has
/// value 1. When the dominance guard fails the remaining instance is
/// finished by brute force.
pub fn d_recursive(v: &[i64], lambda: &Partition, a: &WeakComposition) -> Result<QLaurent> {
    let n = a.len();
    check_vlen(v, n)?;
    let lambda = lambda.padded(n)?;
    if v.iter().sum::<i64>() != lambda.size() {
        return Ok(QLaurent::zero());
    }
    let mut acc = QLaurent::one();
    let mut v_cur = v.to_vec();
    let mut lam_cur = lambda.parts().to_vec();
    let mut a_cur = a.parts().to_vec();
    loop {
        if a_cur.is_empty() {
            return Ok(acc);
        }
        let l1 = lam_cur[0];
        let vmax = v_cur.iter().copied().max().expect("nonempty");
        if l1 < vmax {
            let rest = d_brute(
                &v_cur,
                &Partition::new(lam_cur).expect("peeled partition stays sorted"),
                &WeakComposition::new(a_cur).expect("entries stay nonnegative"),
            )?;
            return Ok(&acc * &rest);
        }
        if l1 > v_cur[0] {
            return Ok(QLaurent::zero());
        }
        let total: i64 = a_cur.iter().sum();
        acc *= &qbinom(total + l1, a_cur[0]).shifted(-l1);
        v_cur.remove(0);
        lam_cur.remove(0);
        a_cur.remove(0);
    }
}
