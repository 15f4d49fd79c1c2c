//! Integer vectors, weak compositions, partitions, and the orderings used
//! by the vanishing results: the one-sided refinement order on vectors,
//! reverse lexicographic order, and dominance order.

use std::fmt;

use crate::error::{Error, Result};

/// A finite vector of nonnegative integers; order of entries matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeakComposition(Vec<i64>);

impl WeakComposition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        for (index, &value) in parts.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativePart { index, value });
            }
        }
        Ok(WeakComposition(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// Sum of all entries.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sum of entries from index `i` (inclusive) to the end.
    pub fn suffix_sum(&self, i: usize) -> i64 {
        self.0[i..].iter().sum()
    }

    /// Drops entry `i`, keeping the order of the rest.
    pub fn without(&self, i: usize) -> Result<Self> {
        if i >= self.0.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.0.len() });
        }
        let mut parts = self.0.clone();
        parts.remove(i);
        Ok(WeakComposition(parts))
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vec(&self.0))
    }
}

/// A weakly decreasing vector of nonnegative integers. Trailing zeros are
/// kept as stored, so `(2, 1, 0)` and `(2, 1)` are distinct representations
/// of the same partition; [`Partition::part`] hides the difference.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        for (index, &value) in parts.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativePart { index, value });
            }
            if index > 0 && parts[index - 1] < value {
                return Err(Error::NotAPartition { index });
            }
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// Part `i`, or 0 past the stored length.
    pub fn part(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of stored entries, including trailing zeros.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero parts.
    pub fn num_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// Sum of all parts.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The same partition stored with exactly `len` entries; fails when a
    /// nonzero part would be cut off.
    pub fn padded(&self, len: usize) -> Result<Self> {
        if self.num_parts() > len {
            return Err(Error::DimensionMismatch { expected: len, got: self.num_parts() });
        }
        let mut parts = Vec::with_capacity(len);
        for i in 0..len {
            parts.push(self.part(i));
        }
        Ok(Partition(parts))
    }

    /// Drops part `i` and restores weakly decreasing order of the rest
    /// (the rest is already sorted, so removal suffices).
    pub fn without(&self, i: usize) -> Result<Self> {
        if i >= self.0.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.0.len() });
        }
        let mut parts = self.0.clone();
        parts.remove(i);
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vec(&self.0))
    }
}

/// Renders an integer vector as `(a, b, c)`; the empty vector as `()`.
pub fn fmt_vec(v: &[i64]) -> String {
    let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", body.join(","))
}

/// Sorts a vector into weakly decreasing order. Entries may be negative;
/// for a vector of nonnegative integers this is its partition rearrangement.
pub fn sorted_decreasing(v: &[i64]) -> Vec<i64> {
    let mut out = v.to_vec();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// The one-sided order on integer vectors: `u` precedes-or-equals `v` when
/// `u = v` after zero padding, or there is a position `i` with
/// `u_1 = v_1, ..., u_{i-1} = v_{i-1}`, `u_i < v_i`, and every later entry
/// of `u` is at most `v_i`. Vectors of different lengths are compared after
/// padding the shorter with zeros.
pub fn prec_leq(u: &[i64], v: &[i64]) -> bool {
    let len = u.len().max(v.len());
    let ue = |i: usize| u.get(i).copied().unwrap_or(0);
    let ve = |i: usize| v.get(i).copied().unwrap_or(0);
    if (0..len).all(|i| ue(i) == ve(i)) {
        return true;
    }
    for i in 0..len {
        if ue(i) == ve(i) {
            continue;
        }
        if ue(i) > ve(i) {
            return false;
        }
        let bound = ve(i);
        return (i + 1..len).all(|j| ue(j) <= bound);
    }
    false
}

/// Strict version of [`prec_leq`]: equal vectors (after padding) are excluded.
pub fn prec_lt(u: &[i64], v: &[i64]) -> bool {
    let len = u.len().max(v.len());
    let equal = (0..len).all(|i| {
        u.get(i).copied().unwrap_or(0) == v.get(i).copied().unwrap_or(0)
    });
    !equal && prec_leq(u, v)
}

/// Reverse lexicographic order on partitions of equal size: `a <= b` when
/// they are equal or the first differing part of `a` is smaller. This is a
/// linear extension of dominance order.
pub fn revlex_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch);
    }
    let len = a.len().max(b.len());
    for i in 0..len {
        if a.part(i) != b.part(i) {
            return Ok(a.part(i) < b.part(i));
        }
    }
    Ok(true)
}

/// Dominance order on weakly decreasing vectors of equal sum: `a <= b` when
/// every prefix sum of `a` is at most the matching prefix sum of `b`.
/// Entries may be negative; shorter vectors are padded with zeros.
pub fn dominance_leq(a: &[i64], b: &[i64]) -> Result<bool> {
    let sum = |v: &[i64]| v.iter().sum::<i64>();
    if sum(a) != sum(b) {
        return Err(Error::SizeMismatch);
    }
    let len = a.len().max(b.len());
    let mut pa = 0i64;
    let mut pb = 0i64;
    for i in 0..len {
        pa += a.get(i).copied().unwrap_or(0);
        pb += b.get(i).copied().unwrap_or(0);
        if pa > pb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All weak compositions of length `n` with every entry in `0..=max`,
/// in lexicographic order.
pub fn compositions_in_box(n: usize, max: i64) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        out.push(WeakComposition(cur.clone()));
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < max {
                cur[i] += 1;
                for slot in cur.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

/// All integer vectors of length `n` with entries in `lo..=hi` and entry sum
/// `total`, in lexicographic order.
pub fn vectors_with_sum(n: usize, lo: i64, hi: i64, total: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(cur: &mut Vec<i64>, i: usize, lo: i64, hi: i64, rem: i64, out: &mut Vec<Vec<i64>>) {
        let slots = (cur.len() - i) as i64;
        if slots == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // prune when the remaining slots cannot reach the remaining sum
        if rem < lo * slots || rem > hi * slots {
            return;
        }
        for v in lo..=hi {
            cur[i] = v;
            rec(cur, i + 1, lo, hi, rem - v, out);
        }
    }
    rec(&mut cur, 0, lo, hi, total, &mut out);
    out
}

/// All partitions of `size` with at most `max_len` parts, ordered with the
/// largest first part first; `(0)` is represented by the empty partition.
pub fn partitions_of(size: i64, max_len: usize) -> Vec<Partition> {
    assert!(size >= 0, "partition size must be nonnegative");
    let mut out = Vec::new();
    let mut cur: Vec<i64> = Vec::new();
    fn rec(rem: i64, max_part: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        let first = rem.min(max_part);
        for p in (1..=first).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(size, size, max_len, &mut cur, &mut out);
    out
}

/// All partitions of `size` with any number of parts.
pub fn partitions_of_any_len(size: i64) -> Vec<Partition> {
    partitions_of(size, size.max(0) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weak_composition_rejects_negative() {
        assert_eq!(
            WeakComposition::new(vec![1, -2]),
            Err(Error::NegativePart { index: 1, value: -2 })
        );
        let a = WeakComposition::new(vec![1, 0, 2]).unwrap();
        assert_eq!(a.size(), 3);
        assert_eq!(a.suffix_sum(1), 2);
        assert_eq!(a.without(0).unwrap().parts(), &[0, 2]);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 1, 0]).is_ok());
        assert_eq!(Partition::new(vec![1, 2]), Err(Error::NotAPartition { index: 1 }));
        assert_eq!(
            Partition::new(vec![-1]),
            Err(Error::NegativePart { index: 0, value: -1 })
        );
    }

    #[test]
    fn partition_padding_and_removal() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.padded(4).unwrap().parts(), &[2, 1, 0, 0]);
        assert!(p.padded(1).is_err());
        assert_eq!(p.part(7), 0);
        assert_eq!(p.without(0).unwrap().parts(), &[1]);
    }

    #[test]
    fn one_sided_order_examples() {
        // strict: first difference at index 0, later entries bounded by 2
        assert!(prec_lt(&[0, 2], &[2, 0]));
        // (2,1) vs (1,2): first difference has u_0 > v_0
        assert!(!prec_leq(&[2, 1], &[1, 2]));
        // (1,2) vs (2,1): u_0 < v_0 = 2 and u_1 = 2 <= 2
        assert!(prec_leq(&[1, 2], &[2, 1]));
        // (1,3) vs (2,1): u_1 = 3 > 2 violates the tail bound
        assert!(!prec_leq(&[1, 3], &[2, 1]));
        // equality after zero padding
        assert!(prec_leq(&[2, 0], &[2]));
        assert!(!prec_lt(&[2, 0], &[2]));
        // negative entries on the left are allowed
        assert!(prec_lt(&[-1, 1], &[1, 1]));
    }

    #[test]
    fn one_sided_order_matches_revlex_on_partitions() {
        for s in 0..=6i64 {
            let parts = partitions_of_any_len(s);
            for a in &parts {
                for b in &parts {
                    assert_eq!(
                        prec_leq(a.parts(), b.parts()),
                        revlex_leq(a, b).unwrap(),
                        "mismatch at {a} vs {b}"
                    );
                    // reverse lexicographic order extends dominance order
                    if dominance_leq(a.parts(), b.parts()).unwrap() {
                        assert!(revlex_leq(a, b).unwrap(), "{a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&[2, 2], &[3, 1]).unwrap());
        assert!(!dominance_leq(&[3, 1], &[2, 2]).unwrap());
        assert!(dominance_leq(&[2, 2], &[2, 2]).unwrap());
        assert_eq!(dominance_leq(&[1], &[2]), Err(Error::SizeMismatch));
        // incomparable pair: (3,1,1,1) vs (2,2,2)
        assert!(!dominance_leq(&[3, 1, 1, 1], &[2, 2, 2]).unwrap());
        assert!(!dominance_leq(&[2, 2, 2], &[3, 1, 1, 1]).unwrap());
    }

    #[test]
    fn sorted_decreasing_handles_negatives() {
        assert_eq!(sorted_decreasing(&[0, 2, -1, 2]), vec![2, 2, 0, -1]);
    }

    #[test]
    fn box_enumeration_is_lexicographic() {
        let all = compositions_in_box(2, 1);
        let got: Vec<&[i64]> = all.iter().map(|c| c.parts()).collect();
        assert_eq!(got, vec![&[0, 0][..], &[0, 1], &[1, 0], &[1, 1]]);
        assert_eq!(compositions_in_box(3, 2).len(), 27);
        assert_eq!(compositions_in_box(0, 5).len(), 1);
    }

    #[test]
    fn vectors_with_sum_window() {
        let all = vectors_with_sum(2, -1, 2, 1);
        let expect: Vec<Vec<i64>> =
            vec![vec![-1, 2], vec![0, 1], vec![1, 0], vec![2, -1]];
        assert_eq!(all, expect);
        assert_eq!(vectors_with_sum(0, -1, 4, 0), vec![Vec::<i64>::new()]);
        assert!(vectors_with_sum(0, -1, 4, 2).is_empty());
    }

    #[test]
    fn partition_enumeration() {
        let p4 = partitions_of_any_len(4);
        let got: Vec<&[i64]> = p4.iter().map(|p| p.parts()).collect();
        assert_eq!(
            got,
            vec![&[4][..], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]]
        );
        let p4_short = partitions_of(4, 2);
        assert_eq!(p4_short.len(), 3);
        assert_eq!(partitions_of(0, 3), vec![Partition::empty()]);
    }
}
