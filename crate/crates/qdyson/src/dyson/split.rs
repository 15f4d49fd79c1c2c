//! Partial-fraction splitting of the auxiliary rational function `F(a, w)`.
//!
//! `F(a, w)` multiplies the Dyson kernel by
//! `prod_{i,j} (q^(-[j=i]) x_i / w_j; q)_(a_i + [j=i])^(-1)`, where `[.]` is
//! the indicator. Viewed as a rational function of `w_1` it has simple
//! poles, which yields a decomposition
//!
//! `F(a, w) = sum_{k=-1}^{a_1 - 1} A_k / (1 - q^k x_1 / w_1)
//!          + sum_{i in I} sum_{j=0}^{a_i - 1} B_ij / (1 - q^j x_i / w_1)`
//!
//! with `I = {i >= 2 : a_i != 0}`. The numerators are built symbolically as
//! products of Pochhammer factors and the identity is checked by exact
//! rational evaluation at random points; every denominator test is an exact
//! zero test, never a tolerance.
//!
//! Variable layout: a ring with `2n` slots, `x_i` at slot `i - 1` and `w_j`
//! at slot `n + j - 1` (zero-based).

use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{rat_pow, BigInt, BigRat, QLaurent};
use crate::partitions::WeakComposition;
use crate::qseries::pochhammer;
use crate::xpoly::{Monomial, RationalPoint, XPoly};

/// One q-shifted factorial `(q^qshift * arg; q)_len`, possibly inverted,
/// where `arg` is a Laurent monomial in the ring variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochSpec {
    pub arg: Monomial,
    pub qshift: i64,
    pub len: i64,
    pub inverted: bool,
}

impl PochSpec {
    /// Evaluates the underlying product `prod_t (1 - base * q^(qshift+t))`
    /// before any inversion.
    fn eval_product(&self, q: &BigRat, values: &[BigRat]) -> BigRat {
        let base = self.arg.eval(values);
        let mut acc = BigRat::one();
        for t in 0..self.len {
            acc *= BigRat::one() - &base * rat_pow(q, self.qshift + t);
        }
        acc
    }
}

/// A product `sign * q^qpow * x^prefactor * prod factors`, the shape of
/// every numerator appearing in the splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorExpr {
    nvars: usize,
    sign: i64,
    qpow: i64,
    prefactor: Monomial,
    factors: Vec<PochSpec>,
}

impl FactorExpr {
    fn new(nvars: usize) -> Self {
        FactorExpr {
            nvars,
            sign: 1,
            qpow: 0,
            prefactor: Monomial::unit(nvars),
            factors: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn factors(&self) -> &[PochSpec] {
        &self.factors
    }

    fn push(&mut self, arg: Monomial, qshift: i64, len: i64, inverted: bool) {
        debug_assert_eq!(arg.len(), self.nvars);
        if len == 0 {
            return; // empty product is 1 either way
        }
        self.factors.push(PochSpec { arg, qshift, len, inverted });
    }

    fn mul_scalar(&mut self, sign: i64, qpow: i64) {
        self.sign *= sign;
        self.qpow += qpow;
    }

    fn mul_monomial(&mut self, m: &Monomial) {
        let exps: Vec<i64> = self
            .prefactor
            .exps()
            .iter()
            .zip(m.exps())
            .map(|(a, b)| a + b)
            .collect();
        self.prefactor = Monomial::new(exps);
    }

    fn mul_expr(&mut self, other: FactorExpr) {
        debug_assert_eq!(self.nvars, other.nvars);
        self.sign *= other.sign;
        self.qpow += other.qpow;
        self.mul_monomial(&other.prefactor);
        self.factors.extend(other.factors);
    }

    /// Exact rational evaluation; inverted factors that vanish at the point
    /// are reported as poles.
    pub fn eval(&self, pt: &RationalPoint) -> Result<BigRat> {
        if pt.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: pt.nvars() });
        }
        let q = pt.q();
        let values = pt.values();
        let mut acc = BigRat::from(BigInt::from(self.sign)) * rat_pow(q, self.qpow);
        acc *= self.prefactor.eval(values);
        for spec in &self.factors {
            let p = spec.eval_product(q, values);
            if spec.inverted {
                if p.is_zero() {
                    return Err(Error::PoleAtPoint);
                }
                acc /= p;
            } else {
                if p.is_zero() {
                    return Ok(BigRat::zero());
                }
                acc *= p;
            }
        }
        Ok(acc)
    }
}

/// A monomial `x_num / x_den` over `nvars` slots.
fn ratio(nvars: usize, num: usize, den: usize) -> Monomial {
    let mut exps = vec![0i64; nvars];
    exps[num] += 1;
    exps[den] -= 1;
    Monomial::new(exps)
}

/// `F` over an arbitrary slot assignment: `x_slots[i]` carries the i-th
/// `x` variable and `w_slots[j]` the j-th `w` variable of a sub-instance.
fn f_expr_on_slots(
    nvars: usize,
    a: &[i64],
    x_slots: &[usize],
    w_slots: &[usize],
) -> FactorExpr {
    debug_assert_eq!(a.len(), x_slots.len());
    debug_assert_eq!(a.len(), w_slots.len());
    let m = a.len();
    let mut expr = FactorExpr::new(nvars);
    for i in 0..m {
        for j in (i + 1)..m {
            expr.push(ratio(nvars, x_slots[i], x_slots[j]), 0, a[i], false);
            expr.push(ratio(nvars, x_slots[j], x_slots[i]), 1, a[j], false);
        }
    }
    for i in 0..m {
        for (j, &w) in w_slots.iter().enumerate() {
            let diag = i == j;
            expr.push(
                ratio(nvars, x_slots[i], w),
                if diag { -1 } else { 0 },
                a[i] + i64::from(diag),
                true,
            );
        }
    }
    expr
}

/// The full `F(a, w)` over the `2n`-slot ring.
pub fn f_expr(a: &WeakComposition) -> FactorExpr {
    let n = a.len();
    let x_slots: Vec<usize> = (0..n).collect();
    let w_slots: Vec<usize> = (n..2 * n).collect();
    f_expr_on_slots(2 * n, a.parts(), &x_slots, &w_slots)
}

/// One summand of the splitting: `numer / (1 - q^pole_qshift x_(pole_var+1) / w_1)`.
#[derive(Clone, Debug)]
pub struct SplitTerm {
    pub pole_var: usize,
    pub pole_qshift: i64,
    pub numer: FactorExpr,
}

/// Builds the numerators of the decomposition of `F(a, w)` with respect to
/// `w_1`. Returns the terms with poles at `w_1 = q^k x_1` (for
/// `k = -1, ..., a_1 - 1`) and the terms with poles at `w_1 = q^j x_i`
/// (for `i >= 2` with `a_i != 0` and `j = 0, ..., a_i - 1`).
pub fn split_terms(a: &WeakComposition) -> (Vec<SplitTerm>, Vec<SplitTerm>) {
    let n = a.len();
    assert!(n >= 1, "splitting needs at least one variable");
    let nv = 2 * n;
    let a1 = a.get(0);
    let pure = Monomial::unit(nv);

    let mut a_terms = Vec::with_capacity((a1 + 1) as usize);
    for k in -1..a1 {
        let mut e = FactorExpr::new(nv);
        for i in 1..n {
            let ai = a.get(i);
            e.mul_scalar(1, (k + 1) * ai);
            e.push(ratio(nv, 0, i), -ai, k + 1, false);
            e.push(ratio(nv, 0, i), k + 1, a1 - k - 1, false);
            e.push(ratio(nv, 0, n + i), 0, a1, true);
        }
        e.push(pure.clone(), -k - 1, k + 1, true);
        e.push(pure.clone(), 1, a1 - k - 1, true);
        let x_tail: Vec<usize> = (1..n).collect();
        let w_tail: Vec<usize> = (n + 1..nv).collect();
        e.mul_expr(f_expr_on_slots(nv, &a.parts()[1..], &x_tail, &w_tail));
        a_terms.push(SplitTerm { pole_var: 0, pole_qshift: k, numer: e });
    }

    let mut b_terms = Vec::new();
    for i in 1..n {
        let ai = a.get(i);
        if ai == 0 {
            continue;
        }
        for j in 0..ai {
            let mut e = FactorExpr::new(nv);
            // -q^((a_1+1)j + 1) x_i / x_1 over (q^-j)_j (q)_(a_i - j - 1)
            e.mul_scalar(-1, (a1 + 1) * j + 1);
            e.mul_monomial(&ratio(nv, i, 0));
            e.push(pure.clone(), -j, j, true);
            e.push(pure.clone(), 1, ai - j - 1, true);
            e.push(ratio(nv, i, 0), 1 - a1, j, false);
            e.push(ratio(nv, i, 0), j + 2, ai - j - 1, false);
            for l in 1..i {
                let al = a.get(l);
                e.mul_scalar(1, j * al);
                e.push(ratio(nv, i, l), 1 - al, j, false);
                e.push(ratio(nv, i, l), j + 1, ai - j, false);
            }
            for l in (i + 1)..n {
                let al = a.get(l);
                e.mul_scalar(1, (j + 1) * al);
                e.push(ratio(nv, i, l), -al, j + 1, false);
                e.push(ratio(nv, i, l), j + 1, ai - j - 1, false);
            }
            for u in 0..n {
                for v in (u + 1)..n {
                    if u == i || v == i {
                        continue;
                    }
                    e.push(ratio(nv, u, v), 0, a.get(u), false);
                    e.push(ratio(nv, v, u), 1, a.get(v), false);
                }
            }
            for u in 0..n {
                for v in 1..n {
                    let diag = u == v;
                    e.push(
                        ratio(nv, u, n + v),
                        if diag { -1 } else { 0 },
                        a.get(u) + i64::from(diag),
                        true,
                    );
                }
            }
            b_terms.push(SplitTerm { pole_var: i, pole_qshift: j, numer: e });
        }
    }
    (a_terms, b_terms)
}

/// Compares `F(a, w)` with its splitting at one rational point. Any
/// denominator vanishing at the point, including a pole factor
/// `1 - q^s x_i / w_1`, is reported so the caller can resample.
pub fn check_split_at_point(a: &WeakComposition, pt: &RationalPoint) -> Result<bool> {
    let n = a.len();
    if pt.nvars() != 2 * n {
        return Err(Error::DimensionMismatch { expected: 2 * n, got: pt.nvars() });
    }
    let lhs = f_expr(a).eval(pt)?;
    let q = pt.q();
    let values = pt.values();
    let w1 = &values[n];
    let (a_terms, b_terms) = split_terms(a);
    let mut rhs = BigRat::zero();
    for term in a_terms.iter().chain(&b_terms) {
        let xi = &values[term.pole_var];
        let den = BigRat::one() - rat_pow(q, term.pole_qshift) * xi / w1;
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        rhs += term.numer.eval(pt)? / den;
    }
    Ok(lhs == rhs)
}

const PRIME_POOL: [i64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
    83, 89, 97,
];

/// Draws a random admissible point for a `2n`-slot instance: `q = p/s` with
/// distinct `p, s` in `2..=7`, and pairwise distinct primes for the `x` and
/// `w` coordinates.
pub fn sample_split_point<R: Rng + ?Sized>(n: usize, rng: &mut R) -> RationalPoint {
    let p: i64 = rng.random_range(2..=7);
    let s: i64 = loop {
        let s = rng.random_range(2..=7);
        if s != p {
            break s;
        }
    };
    let q = BigRat::new(BigInt::from(p), BigInt::from(s));
    let mut pool = PRIME_POOL;
    let (picked, _) = pool.partial_shuffle(rng, 2 * n);
    let values = picked.iter().map(|&v| BigRat::from(BigInt::from(v))).collect();
    RationalPoint::new(q, values).expect("nonzero coordinates")
}

/// Verifies the splitting of `F(a, w)` at one random point, resampling on
/// poles up to a fixed retry budget.
pub fn verify_splitting<R: Rng + ?Sized>(a: &WeakComposition, rng: &mut R) -> Result<bool> {
    const RETRY_BUDGET: usize = 100;
    let n = a.len();
    for _ in 0..RETRY_BUDGET {
        let pt = sample_split_point(n, rng);
        match check_split_at_point(a, &pt) {
            Err(Error::PoleAtPoint) => continue,
            other => return other,
        }
    }
    Err(Error::PoleAtPoint)
}

/// The three cross-multiplied Pochhammer rewrite identities used to derive
/// the splitting numerators. Each relates `(z)`-type and `(1/z)`-type
/// factors after moving a denominator factor to the other side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochRewriteRule {
    /// `(z)_j (q/z)_i = q^((k+1)i) (q^-i z)_(k+1) (q^(k+1) z)_(j-k-1)
    ///  * (q^-k / z)_i` for `-1 <= k <= j - 1`.
    SplitAtK,
    /// `(1/z)_i (qz)_j = -q^((i+1)k+1) z (q^(1-i) z)_k (q^(k+2) z)_(j-k-1)
    ///  * (q^(-k-1) / z)_(i+1)` for `j > 0` and `0 <= k <= j - 1`.
    SplitBelowDiagonal,
    /// `(1/z)_i (qz)_j = q^(ik) (q^(1-i) z)_k (q^(k+1) z)_(j-k)
    ///  * (q^-k / z)_i` for `0 <= k <= j`.
    SplitThroughDiagonal,
}

impl PochRewriteRule {
    pub const ALL: [PochRewriteRule; 3] = [
        PochRewriteRule::SplitAtK,
        PochRewriteRule::SplitBelowDiagonal,
        PochRewriteRule::SplitThroughDiagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PochRewriteRule::SplitAtK => "split-at-k",
            PochRewriteRule::SplitBelowDiagonal => "split-below-diagonal",
            PochRewriteRule::SplitThroughDiagonal => "split-through-diagonal",
        }
    }

    /// The admissible `k` values for given `i, j` (empty when none).
    pub fn k_range(self, _i: i64, j: i64) -> std::ops::RangeInclusive<i64> {
        match self {
            PochRewriteRule::SplitAtK => -1..=j - 1,
            PochRewriteRule::SplitBelowDiagonal => 0..=j - 1,
            PochRewriteRule::SplitThroughDiagonal => 0..=j,
        }
    }
}

/// `(q^qshift z^zexp; q)_len` in the one-variable ring, `zexp` is 1 or -1.
fn zpoch(qshift: i64, zexp: i64, len: i64) -> XPoly {
    let arg = XPoly::term(1, Monomial::new(vec![zexp]), QLaurent::monomial(1, qshift));
    pochhammer(&arg, len).expect("monomial argument")
}

/// Checks one rewrite identity as an exact Laurent-polynomial identity in
/// `z` after cross-multiplication. Parameters outside the rule's range are
/// rejected.
pub fn check_poch_rewrite(rule: PochRewriteRule, i: i64, j: i64, k: i64) -> Result<bool> {
    if i < 0 || j < 0 {
        return Err(Error::RangeViolation(format!("need i, j >= 0, got i={i}, j={j}")));
    }
    if rule == PochRewriteRule::SplitBelowDiagonal && j == 0 {
        return Err(Error::RangeViolation("rule needs j > 0".into()));
    }
    if !rule.k_range(i, j).contains(&k) {
        return Err(Error::RangeViolation(format!(
            "k={k} outside admissible range for i={i}, j={j}"
        )));
    }
    let (lhs, rhs) = match rule {
        PochRewriteRule::SplitAtK => {
            let lhs = &zpoch(0, 1, j) * &zpoch(1, -1, i);
            let rhs = &(&zpoch(-i, 1, k + 1) * &zpoch(k + 1, 1, j - k - 1))
                .scaled(&QLaurent::monomial(1, (k + 1) * i))
                * &zpoch(-k, -1, i);
            (lhs, rhs)
        }
        PochRewriteRule::SplitBelowDiagonal => {
            let lhs = &zpoch(0, -1, i) * &zpoch(1, 1, j);
            let z = XPoly::var(1, 0);
            let head = &(&zpoch(1 - i, 1, k) * &zpoch(k + 2, 1, j - k - 1))
                .scaled(&QLaurent::monomial(-1, (i + 1) * k + 1))
                * &z;
            let rhs = &head * &zpoch(-k - 1, -1, i + 1);
            (lhs, rhs)
        }
        PochRewriteRule::SplitThroughDiagonal => {
            let lhs = &zpoch(0, -1, i) * &zpoch(1, 1, j);
            let rhs = &(&zpoch(1 - i, 1, k) * &zpoch(k + 1, 1, j - k))
                .scaled(&QLaurent::monomial(1, i * k))
                * &zpoch(-k, -1, i);
            (lhs, rhs)
        }
    };
    Ok(lhs == rhs)
}
