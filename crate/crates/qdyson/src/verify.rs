//! Verification sweeps: enumerates desk-scale instances of every identity
//! in the crate and checks each one by exact computation.
//!
//! A sweep is planned as a deterministic list of cases from a [`Suite`] and
//! [`Bounds`]; running a case yields one or more [`CaseRecord`]s with
//! labeled output values and a pass flag. Case enumeration is lexicographic
//! in `(n, a, lambda, v)`, so reports are reproducible byte for byte given
//! the same bounds and seed. Randomness appears only in the splitting suite
//! and is derived from the seed and the case index, never from global state.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dyson::split::{check_poch_rewrite, verify_splitting, PochRewriteRule};
use crate::dyson::{
    d_closed, d_product_poly, d_recursive, dt_brute, dt_product_poly, dt_single_row,
    dyson_product, qdyson_rhs,
};
use crate::error::Error;
use crate::exact::QLaurent;
use crate::partitions::{
    compositions_in_box, dominance_leq, fmt_vec, partitions_of, partitions_of_any_len,
    prec_lt, sorted_decreasing, vectors_with_sum, Partition, WeakComposition,
};
use crate::qseries::{check_qbinom_sum, check_qbinom_theorem, qbinom};

/// Exponent window for swept `v` vectors.
const V_LO: i64 = -1;
const V_HI: i64 = 4;

/// Number of random points per splitting case.
const SPLIT_POINTS: usize = 5;

/// The named verification suites exposed by the command-line interface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Constant term of the bare kernel against the product formula.
    QDyson,
    /// Diagonal closed form and the vanishing below the diagonal.
    Diagonal,
    /// Single-row closed form for `Dt` over all `v`.
    SingleRow,
    /// The three Pochhammer rewrite identities.
    PochRewrite,
    /// Partial-fraction splitting of `F(a, w)` at random points.
    Splitting,
    /// Gaussian-binomial summation and the finite q-binomial theorem.
    BinomialSum,
    /// Peeling recursion against brute force.
    Recursion,
    /// Dominance-order vanishing criterion for `Dt`.
    Dominance,
    /// Fixed examples beyond the diagonal and the `h`-expansion relation.
    Expansion,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::QDyson,
        Suite::Diagonal,
        Suite::SingleRow,
        Suite::PochRewrite,
        Suite::Splitting,
        Suite::BinomialSum,
        Suite::Recursion,
        Suite::Dominance,
        Suite::Expansion,
    ];

    /// Stable command-line token for the suite.
    pub fn token(self) -> &'static str {
        match self {
            Suite::QDyson => "qdyson",
            Suite::Diagonal => "thm1",
            Suite::SingleRow => "kadell",
            Suite::PochRewrite => "lemma31",
            Suite::Splitting => "lemma32",
            Suite::BinomialSum => "prop41",
            Suite::Recursion => "recursion",
            Suite::Dominance => "cai",
            Suite::Expansion => "section5",
        }
    }

    pub fn from_token(token: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.token() == token)
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::QDyson => "kernel constant term equals the product formula",
            Suite::Diagonal => "diagonal closed form; zero below the diagonal",
            Suite::SingleRow => "single-row closed form for Dt over all v",
            Suite::PochRewrite => "Pochhammer rewrite identities in z",
            Suite::Splitting => "partial-fraction splitting of F at random points",
            Suite::BinomialSum => "binomial summation and q-binomial theorem",
            Suite::Recursion => "peeling recursion against brute force",
            Suite::Dominance => "dominance vanishing criterion for Dt",
            Suite::Expansion => "fixed off-diagonal examples and h-expansion",
        }
    }

    /// Bounds used when the caller does not override them; each suite's
    /// defaults match its acceptance grid.
    pub fn default_bounds(self) -> Bounds {
        let (n_max, a_max, lambda_size_max) = match self {
            Suite::QDyson => (4, 2, 0),
            Suite::Diagonal => (3, 2, 4),
            Suite::SingleRow => (3, 2, 3),
            Suite::PochRewrite => (4, 0, 0),
            Suite::Splitting => (3, 2, 0),
            Suite::BinomialSum => (10, 0, 0),
            Suite::Recursion => (3, 2, 4),
            Suite::Dominance => (3, 2, 4),
            Suite::Expansion => (3, 2, 0),
        };
        Bounds { n_max, a_max, lambda_size_max, seed: 1 }
    }
}

/// Sweep limits: `n_max` bounds the variable count (and the index cap of
/// the rewrite suite), `a_max` each entry of `a`, `lambda_size_max` the
/// size `|lambda|` (and the single-row length). `seed` drives the random
/// points of the splitting suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub n_max: usize,
    pub a_max: i64,
    pub lambda_size_max: i64,
    pub seed: u64,
}

/// A planned unit of work; one case may produce several records.
#[derive(Clone, Debug)]
pub struct SweepCase {
    pub id: String,
    pub kind: CaseKind,
}

#[derive(Clone, Debug)]
pub enum CaseKind {
    PlainDyson { a: WeakComposition },
    DiagonalGroup { lambda: Partition, a: WeakComposition },
    SingleRowGroup { r: i64, a: WeakComposition },
    PochRewriteCase { rule: PochRewriteRule, i: i64, j: i64, k: i64 },
    SplittingCase { a: WeakComposition },
    BinomialSumCase { n: i64, t: i64 },
    BinomialTheoremCase { t: i64 },
    RecursionGroup { lambda: Partition, a: WeakComposition },
    DominanceGroup { lambda: Partition, a: WeakComposition },
    ZeroExample { v: Vec<i64>, lambda: Partition, a: WeakComposition },
    NonzeroExample { v: Vec<i64>, lambda: Partition, a: WeakComposition },
    ExpansionCase { a: WeakComposition },
}

/// One labeled output value of a record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub label: String,
    pub value: String,
}

impl Output {
    fn new(label: &str, value: impl ToString) -> Self {
        Output { label: label.to_string(), value: value.to_string() }
    }
}

/// Result of one checked instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRecord {
    pub id: String,
    pub outputs: Vec<Output>,
    pub pass: bool,
}

/// Result of a whole suite run.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub records: Vec<CaseRecord>,
    pub pass: bool,
}

/// Enumerates the cases of a suite under the given bounds; the order is
/// part of the report contract.
pub fn plan(suite: Suite, bounds: &Bounds) -> Vec<SweepCase> {
    let mut cases = Vec::new();
    match suite {
        Suite::QDyson => {
            for n in 1..=bounds.n_max {
                for a in compositions_in_box(n, bounds.a_max) {
                    cases.push(SweepCase {
                        id: format!("qdyson a={a}"),
                        kind: CaseKind::PlainDyson { a },
                    });
                }
            }
        }
        Suite::Diagonal | Suite::Recursion => {
            for n in 1..=bounds.n_max {
                for a in compositions_in_box(n, bounds.a_max) {
                    for size in 0..=bounds.lambda_size_max {
                        for lambda in partitions_of(size, n) {
                            let (word, kind) = if suite == Suite::Diagonal {
                                (
                                    "diagonal",
                                    CaseKind::DiagonalGroup {
                                        lambda: lambda.clone(),
                                        a: a.clone(),
                                    },
                                )
                            } else {
                                (
                                    "recursion",
                                    CaseKind::RecursionGroup {
                                        lambda: lambda.clone(),
                                        a: a.clone(),
                                    },
                                )
                            };
                            cases.push(SweepCase {
                                id: format!("{word} lambda={lambda} a={a}"),
                                kind,
                            });
                        }
                    }
                }
            }
        }
        Suite::SingleRow => {
            for n in 1..=bounds.n_max {
                for a in compositions_in_box(n, bounds.a_max) {
                    for r in 1..=bounds.lambda_size_max {
                        cases.push(SweepCase {
                            id: format!("single-row r={r} a={a}"),
                            kind: CaseKind::SingleRowGroup { r, a: a.clone() },
                        });
                    }
                }
            }
        }
        Suite::PochRewrite => {
            let cap = bounds.n_max as i64;
            for rule in PochRewriteRule::ALL {
                for i in 0..=cap {
                    for j in 0..=cap {
                        if rule == PochRewriteRule::SplitBelowDiagonal && j == 0 {
                            continue;
                        }
                        for k in rule.k_range(i, j) {
                            cases.push(SweepCase {
                                id: format!(
                                    "poch-rewrite rule={} i={i} j={j} k={k}",
                                    rule.name()
                                ),
                                kind: CaseKind::PochRewriteCase { rule, i, j, k },
                            });
                        }
                    }
                }
            }
        }
        Suite::Splitting => {
            for n in 1..=bounds.n_max {
                for a in compositions_in_box(n, bounds.a_max) {
                    cases.push(SweepCase {
                        id: format!("splitting a={a}"),
                        kind: CaseKind::SplittingCase { a },
                    });
                }
            }
        }
        Suite::BinomialSum => {
            for n in 0..=bounds.n_max as i64 {
                for t in 0..=n {
                    cases.push(SweepCase {
                        id: format!("binomial-sum n={n} t={t}"),
                        kind: CaseKind::BinomialSumCase { n, t },
                    });
                }
            }
            for t in 0..=bounds.n_max as i64 {
                cases.push(SweepCase {
                    id: format!("binomial-theorem t={t}"),
                    kind: CaseKind::BinomialTheoremCase { t },
                });
            }
        }
        Suite::Dominance => {
            for n in 1..=bounds.n_max {
                for a in compositions_in_box(n, bounds.a_max) {
                    for size in 0..=bounds.lambda_size_max {
                        for lambda in partitions_of_any_len(size) {
                            cases.push(SweepCase {
                                id: format!("dominance lambda={lambda} a={a}"),
                                kind: CaseKind::DominanceGroup {
                                    lambda,
                                    a: a.clone(),
                                },
                            });
                        }
                    }
                }
            }
        }
        Suite::Expansion => {
            if bounds.n_max >= 3 {
                let lambda = Partition::new(vec![4, 3]).expect("sorted");
                let fixed_a: [&[i64]; 3] = [&[1, 1, 1], &[2, 1, 1], &[1, 2, 1]];
                for parts in fixed_a {
                    if parts.iter().any(|&x| x > bounds.a_max) {
                        continue;
                    }
                    let a = WeakComposition::new(parts.to_vec()).expect("nonnegative");
                    for v in [[0i64, 5, 2], [5, 0, 2]] {
                        cases.push(SweepCase {
                            id: format!("zero-example v={} a={a}", fmt_vec(&v)),
                            kind: CaseKind::ZeroExample {
                                v: v.to_vec(),
                                lambda: lambda.clone(),
                                a: a.clone(),
                            },
                        });
                    }
                }
                if bounds.a_max >= 1 {
                    let a = WeakComposition::new(vec![1, 1, 1]).expect("nonnegative");
                    for v in [[5i64, 2, 0], [2, 0, 5], [2, 5, 0], [0, 2, 5]] {
                        cases.push(SweepCase {
                            id: format!("nonzero-example v={} a={a}", fmt_vec(&v)),
                            kind: CaseKind::NonzeroExample {
                                v: v.to_vec(),
                                lambda: lambda.clone(),
                                a: a.clone(),
                            },
                        });
                    }
                }
            }
            for n in 2..=bounds.n_max {
                for a in compositions_in_box(n, bounds.a_max) {
                    cases.push(SweepCase {
                        id: format!("expansion a={a}"),
                        kind: CaseKind::ExpansionCase { a },
                    });
                }
            }
        }
    }
    cases
}

fn record_err(id: &str, err: &Error) -> CaseRecord {
    CaseRecord {
        id: id.to_string(),
        outputs: vec![Output::new("error", err)],
        pass: false,
    }
}

fn record_pair(id: String, la: &str, va: &QLaurent, lb: &str, vb: &QLaurent) -> CaseRecord {
    CaseRecord {
        id,
        pass: va == vb,
        outputs: vec![Output::new(la, va), Output::new(lb, vb)],
    }
}

fn record_zero(id: String, value: &QLaurent) -> CaseRecord {
    CaseRecord {
        id,
        pass: value.is_zero(),
        outputs: vec![Output::new("value", value), Output::new("expected", "0")],
    }
}

/// Runs one planned case. `seed` and `stream` determine the random points
/// of splitting cases; all other cases are fully deterministic.
pub fn run_case(case: &SweepCase, seed: u64, stream: u64) -> Vec<CaseRecord> {
    match &case.kind {
        CaseKind::PlainDyson { a } => {
            let ct = dyson_product(a).constant_term();
            let rhs = qdyson_rhs(a);
            vec![record_pair(case.id.clone(), "constant-term", &ct, "product-formula", &rhs)]
        }
        CaseKind::DiagonalGroup { lambda, a } => {
            let n = a.len();
            let master = match d_product_poly(lambda, a) {
                Ok(m) => m,
                Err(e) => return vec![record_err(&case.id, &e)],
            };
            let padded = lambda.padded(n).expect("planned to fit");
            let mut records = Vec::new();
            let brute = master.coeff_of(padded.parts()).expect("matching length");
            match d_closed(lambda, a) {
                Ok(closed) => records.push(record_pair(
                    case.id.clone(),
                    "brute",
                    &brute,
                    "closed",
                    &closed,
                )),
                Err(e) => records.push(record_err(&case.id, &e)),
            }
            for v in vectors_with_sum(n, V_LO, V_HI, lambda.size()) {
                if !prec_lt(&v, padded.parts()) {
                    continue;
                }
                let value = master.coeff_of(&v).expect("matching length");
                records.push(record_zero(
                    format!("vanishing lambda={lambda} a={a} v={}", fmt_vec(&v)),
                    &value,
                ));
            }
            records
        }
        CaseKind::SingleRowGroup { r, a } => {
            let n = a.len();
            let lambda = Partition::new(vec![*r]).expect("single part");
            let master = dt_product_poly(&lambda, a);
            let mut records = Vec::new();
            for v in vectors_with_sum(n, 0, *r, *r) {
                let id = format!("single-row r={r} a={a} v={}", fmt_vec(&v));
                let brute = master.coeff_of(&v).expect("matching length");
                match dt_single_row(&v, *r, a) {
                    Ok(closed) => {
                        records.push(record_pair(id, "brute", &brute, "closed", &closed))
                    }
                    Err(e) => records.push(record_err(&id, &e)),
                }
            }
            records
        }
        CaseKind::PochRewriteCase { rule, i, j, k } => match check_poch_rewrite(*rule, *i, *j, *k)
        {
            Ok(equal) => vec![CaseRecord {
                id: case.id.clone(),
                outputs: vec![Output::new("sides-equal", equal)],
                pass: equal,
            }],
            Err(e) => vec![record_err(&case.id, &e)],
        },
        CaseKind::SplittingCase { a } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            let mut outputs = Vec::with_capacity(SPLIT_POINTS);
            let mut pass = true;
            for p in 1..=SPLIT_POINTS {
                let label = format!("point-{p}");
                match verify_splitting(a, &mut rng) {
                    Ok(true) => outputs.push(Output::new(&label, "match")),
                    Ok(false) => {
                        outputs.push(Output::new(&label, "mismatch"));
                        pass = false;
                    }
                    Err(e) => {
                        outputs.push(Output::new(&label, format!("error: {e}")));
                        pass = false;
                    }
                }
            }
            vec![CaseRecord { id: case.id.clone(), outputs, pass }]
        }
        CaseKind::BinomialSumCase { n, t } => match check_qbinom_sum(*n, *t) {
            Ok(equal) => vec![CaseRecord {
                id: case.id.clone(),
                outputs: vec![
                    Output::new("gaussian-binomial", qbinom(*n, *t)),
                    Output::new("sum-matches", equal),
                ],
                pass: equal,
            }],
            Err(e) => vec![record_err(&case.id, &e)],
        },
        CaseKind::BinomialTheoremCase { t } => match check_qbinom_theorem(*t) {
            Ok(equal) => vec![CaseRecord {
                id: case.id.clone(),
                outputs: vec![Output::new("expansion-matches", equal)],
                pass: equal,
            }],
            Err(e) => vec![record_err(&case.id, &e)],
        },
        CaseKind::RecursionGroup { lambda, a } => {
            let n = a.len();
            let master = match d_product_poly(lambda, a) {
                Ok(m) => m,
                Err(e) => return vec![record_err(&case.id, &e)],
            };
            let mut records = Vec::new();
            for v in vectors_with_sum(n, V_LO, V_HI, lambda.size()) {
                let id = format!("recursion lambda={lambda} a={a} v={}", fmt_vec(&v));
                let brute = master.coeff_of(&v).expect("matching length");
                match d_recursive(&v, lambda, a) {
                    Ok(rec) => {
                        records.push(record_pair(id, "recursive", &rec, "brute", &brute))
                    }
                    Err(e) => records.push(record_err(&id, &e)),
                }
            }
            records
        }
        CaseKind::DominanceGroup { lambda, a } => {
            let n = a.len();
            let master = dt_product_poly(lambda, a);
            let mut records = Vec::new();
            for v in vectors_with_sum(n, V_LO, V_HI, lambda.size()) {
                let vplus = sorted_decreasing(&v);
                let dominated = dominance_leq(lambda.parts(), &vplus)
                    .expect("equal sums by construction");
                if dominated {
                    continue;
                }
                let value = master.coeff_of(&v).expect("matching length");
                records.push(record_zero(
                    format!("dominance lambda={lambda} a={a} v={}", fmt_vec(&v)),
                    &value,
                ));
            }
            records
        }
        CaseKind::ZeroExample { v, lambda, a } => {
            match crate::dyson::d_brute(v, lambda, a) {
                Ok(value) => vec![record_zero(case.id.clone(), &value)],
                Err(e) => vec![record_err(&case.id, &e)],
            }
        }
        CaseKind::NonzeroExample { v, lambda, a } => {
            match crate::dyson::d_brute(v, lambda, a) {
                Ok(value) => vec![CaseRecord {
                    id: case.id.clone(),
                    pass: !value.is_zero(),
                    outputs: vec![
                        Output::new("value", &value),
                        Output::new("expected", "nonzero"),
                    ],
                }],
                Err(e) => vec![record_err(&case.id, &e)],
            }
        }
        CaseKind::ExpansionCase { a } => {
            let n = a.len();
            let pad = |v: &[i64]| {
                let mut p = v.to_vec();
                p.resize(n, 0);
                p
            };
            let lam11 = Partition::new(vec![1, 1]).expect("sorted");
            let lam1 = Partition::new(vec![1]).expect("sorted");
            let compute = || -> Result<(QLaurent, QLaurent), Error> {
                let lhs = crate::dyson::d_brute(&pad(&[1, 1]), &lam11, a)?;
                let t1 = dt_brute(&pad(&[1, 1]), &lam11, a)?;
                let t2 = dt_brute(&pad(&[1]), &lam1, a)?;
                let t3 = dt_brute(&pad(&[0, 1]), &lam1, a)?;
                let t4 = dt_brute(&pad(&[]), &Partition::empty(), a)?;
                let rhs = &(&t1 + &t2.shifted(-1)) + &(&t3.shifted(-1) + &t4.shifted(-2));
                Ok((lhs, rhs))
            };
            match compute() {
                Ok((lhs, rhs)) => vec![record_pair(
                    case.id.clone(),
                    "direct",
                    &lhs,
                    "expansion",
                    &rhs,
                )],
                Err(e) => vec![record_err(&case.id, &e)],
            }
        }
    }
}

/// Plans and runs a suite serially; the command-line interface distributes
/// the same cases over worker threads and concatenates records in plan
/// order, so both paths produce identical reports.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> SuiteOutcome {
    let cases = plan(suite, bounds);
    let mut records = Vec::new();
    for (index, case) in cases.iter().enumerate() {
        records.extend(run_case(case, bounds.seed, index as u64));
    }
    let pass = records.iter().all(|r| r.pass);
    SuiteOutcome { records, pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::from_token(suite.token()), Some(suite));
        }
        assert_eq!(Suite::from_token("unknown"), None);
    }

    #[test]
    fn plans_are_deterministic_and_ordered() {
        let bounds = Bounds { n_max: 2, a_max: 1, lambda_size_max: 2, seed: 1 };
        let p1 = plan(Suite::Diagonal, &bounds);
        let p2 = plan(Suite::Diagonal, &bounds);
        let ids1: Vec<&String> = p1.iter().map(|c| &c.id).collect();
        let ids2: Vec<&String> = p2.iter().map(|c| &c.id).collect();
        assert_eq!(ids1, ids2);
        assert!(ids1[0].contains("lambda=() a=(0)"));
    }

    #[test]
    fn empty_bounds_give_empty_passing_suites() {
        let bounds = Bounds { n_max: 0, a_max: 2, lambda_size_max: 4, seed: 1 };
        for suite in [Suite::QDyson, Suite::Diagonal, Suite::Splitting, Suite::Expansion] {
            let outcome = run_suite(suite, &bounds);
            assert!(outcome.records.is_empty(), "{}", suite.token());
            assert!(outcome.pass);
        }
    }

    #[test]
    fn small_runs_pass() {
        let tiny = Bounds { n_max: 2, a_max: 1, lambda_size_max: 2, seed: 1 };
        for suite in Suite::ALL {
            let outcome = run_suite(suite, &tiny);
            assert!(outcome.pass, "suite {} failed", suite.token());
            for r in &outcome.records {
                assert!(r.pass, "{} failed in {}", r.id, suite.token());
            }
        }
    }

    #[test]
    fn runs_are_reproducible() {
        let bounds = Bounds { n_max: 2, a_max: 1, lambda_size_max: 0, seed: 42 };
        let a = run_suite(Suite::Splitting, &bounds);
        let b = run_suite(Suite::Splitting, &bounds);
        assert_eq!(a.records, b.records);
    }

    #[test]
    fn parallel_order_matches_serial() {
        // simulate out-of-order execution by running cases in reverse and
        // reassembling in plan order
        let bounds = Bounds { n_max: 2, a_max: 1, lambda_size_max: 2, seed: 1 };
        let cases = plan(Suite::Diagonal, &bounds);
        let mut chunks: Vec<(usize, Vec<CaseRecord>)> = cases
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| (i, run_case(c, bounds.seed, i as u64)))
            .collect();
        chunks.sort_by_key(|(i, _)| *i);
        let reassembled: Vec<CaseRecord> =
            chunks.into_iter().flat_map(|(_, r)| r).collect();
        let serial = run_suite(Suite::Diagonal, &bounds);
        assert_eq!(reassembled, serial.records);
    }
}
