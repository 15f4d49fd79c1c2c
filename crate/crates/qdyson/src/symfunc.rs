//! Alphabets of geometric letters and complete homogeneous symmetric
//! polynomials evaluated on them.
//!
//! A letter is a product `q^e * x_i`. For a composition `a = (a_1, ..., a_n)`
//! the plain alphabet lists, for each `i`, the geometric run
//! `x_i, x_i q, ..., x_i q^(a_i - 1)`, so it has `|a|` letters. The
//! augmented alphabet for block `i` additionally inserts `x_i q^-1`
//! immediately before that block (even when the block is empty), giving
//! `|a| + 1` letters.
//!
//! `h_r` on an alphabet is the sum of all products of `r` letters with
//! repetition, i.e. the coefficient extraction from
//! `prod_letters 1 / (1 - z * letter)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::WeakComposition;
use crate::xpoly::XPoly;

/// A single letter `q^qexp * x_var` (zero-based variable index).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub var: usize,
    pub qexp: i64,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.qexp {
            0 => write!(f, "x{}", self.var + 1),
            1 => write!(f, "q*x{}", self.var + 1),
            e => write!(f, "q^{}*x{}", e, self.var + 1),
        }
    }
}

/// An ordered multiset of letters over a fixed variable count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    nvars: usize,
    letters: Vec<Letter>,
}

impl Alphabet {
    /// The alphabet with blocks `x_i, x_i q, ..., x_i q^(a_i - 1)` for each
    /// `i`; `|a|` letters in total.
    pub fn plain(a: &WeakComposition) -> Self {
        let mut letters = Vec::with_capacity(a.size().max(0) as usize);
        for (var, &count) in a.parts().iter().enumerate() {
            for e in 0..count {
                letters.push(Letter { var, qexp: e });
            }
        }
        Alphabet { nvars: a.len(), letters }
    }

    /// The plain alphabet with the extra letter `x_i q^-1` inserted
    /// immediately before block `i` (zero-based `i`); `|a| + 1` letters.
    /// The extra letter is inserted even when block `i` is empty.
    pub fn augmented(i: usize, a: &WeakComposition) -> Result<Self> {
        if i >= a.len() {
            return Err(Error::IndexOutOfRange { index: i, len: a.len() });
        }
        let mut letters = Vec::with_capacity(a.size().max(0) as usize + 1);
        for (var, &count) in a.parts().iter().enumerate() {
            if var == i {
                letters.push(Letter { var, qexp: -1 });
            }
            for e in 0..count {
                letters.push(Letter { var, qexp: e });
            }
        }
        Ok(Alphabet { nvars: a.len(), letters })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// Complete homogeneous symmetric polynomial `h_r` on an alphabet, as a
/// polynomial in `x_1, ..., x_n` with `q`-power coefficients.
///
/// `h_0 = 1` on any alphabet (including the empty one), `h_r = 0` for
/// `r < 0`, and `h_r` of the empty alphabet is 0 for `r > 0`. Computed by
/// extending one letter at a time: adjoining letter `y` updates
/// `h_j += y * h_(j-1)` for `j` ascending, which realizes the generating
/// function product letter by letter.
pub fn hcomplete(r: i64, alphabet: &Alphabet) -> XPoly {
    let nvars = alphabet.nvars();
    if r < 0 {
        return XPoly::zero(nvars);
    }
    let r = r as usize;
    let mut h: Vec<XPoly> = Vec::with_capacity(r + 1);
    h.push(XPoly::one(nvars));
    for _ in 0..r {
        h.push(XPoly::zero(nvars));
    }
    for letter in alphabet.letters() {
        let y = XPoly::var_q(nvars, letter.var, letter.qexp);
        for j in 1..=r {
            let add = &y * &h[j - 1];
            h[j] = &h[j] + &add;
        }
    }
    h.pop().expect("r + 1 entries")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QLaurent;

    fn wc(parts: &[i64]) -> WeakComposition {
        WeakComposition::new(parts.to_vec()).unwrap()
    }

    /// Brute-force oracle: sum over all multisets of `r` letters, chosen as
    /// nondecreasing index sequences.
    fn hcomplete_by_multisets(r: i64, alphabet: &Alphabet) -> XPoly {
        let nvars = alphabet.nvars();
        if r < 0 {
            return XPoly::zero(nvars);
        }
        let letters = alphabet.letters();
        let mut acc = XPoly::zero(nvars);
        let mut pick = Vec::new();
        fn rec(
            letters: &[Letter],
            start: usize,
            left: i64,
            nvars: usize,
            pick: &mut Vec<usize>,
            acc: &mut XPoly,
        ) {
            if left == 0 {
                let mut term = XPoly::one(nvars);
                for &idx in pick.iter() {
                    let l = letters[idx];
                    term = &term * &XPoly::var_q(nvars, l.var, l.qexp);
                }
                *acc += &term;
                return;
            }
            for idx in start..letters.len() {
                pick.push(idx);
                rec(letters, idx, left - 1, nvars, pick, acc);
                pick.pop();
            }
        }
        rec(letters, 0, r, nvars, &mut pick, &mut acc);
        acc
    }

    #[test]
    fn plain_alphabet_layout() {
        let a = Alphabet::plain(&wc(&[2, 0, 1]));
        assert_eq!(a.nvars(), 3);
        assert_eq!(
            a.letters(),
            &[
                Letter { var: 0, qexp: 0 },
                Letter { var: 0, qexp: 1 },
                Letter { var: 2, qexp: 0 },
            ]
        );
        assert_eq!(a.to_string(), "{x1, q*x1, x3}");
    }

    #[test]
    fn augmented_alphabet_inserts_before_block() {
        let a = Alphabet::augmented(1, &wc(&[1, 2])).unwrap();
        assert_eq!(
            a.letters(),
            &[
                Letter { var: 0, qexp: 0 },
                Letter { var: 1, qexp: -1 },
                Letter { var: 1, qexp: 0 },
                Letter { var: 1, qexp: 1 },
            ]
        );
        // the inserted letter appears even for an empty block
        let b = Alphabet::augmented(0, &wc(&[0, 1])).unwrap();
        assert_eq!(
            b.letters(),
            &[Letter { var: 0, qexp: -1 }, Letter { var: 1, qexp: 0 }]
        );
        assert_eq!(b.len(), 2);
        assert_eq!(
            Alphabet::augmented(2, &wc(&[1, 1])),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn h0_and_negative_degree() {
        let a = Alphabet::plain(&wc(&[1, 1]));
        assert_eq!(hcomplete(0, &a), XPoly::one(2));
        assert!(hcomplete(-1, &a).is_zero());
        let empty = Alphabet::plain(&wc(&[0, 0]));
        assert_eq!(hcomplete(0, &empty), XPoly::one(2));
        assert!(hcomplete(2, &empty).is_zero());
    }

    #[test]
    fn h_on_geometric_block_is_gaussian() {
        // h_2 on {x1, q x1} = (1 + q + q^2) x1^2 = [3 2] x1^2
        let a = Alphabet::plain(&wc(&[2]));
        let h = hcomplete(2, &a);
        assert_eq!(h.num_terms(), 1);
        assert_eq!(h.coeff_of(&[2]).unwrap(), crate::qseries::qbinom(3, 2));
        // general pattern: h_r on a single geometric block of length m has
        // x1^r coefficient [m + r - 1 choose r]
        for m in 1..=4i64 {
            for r in 0..=4i64 {
                let h = hcomplete(r, &Alphabet::plain(&wc(&[m])));
                assert_eq!(
                    h.coeff_of(&[r]).unwrap(),
                    crate::qseries::qbinom(m + r - 1, r),
                    "m={m}, r={r}"
                );
            }
        }
    }

    #[test]
    fn h_two_variables_hand_value() {
        // h_1 on {x1, x2} = x1 + x2; h_2 = x1^2 + x1 x2 + x2^2
        let a = Alphabet::plain(&wc(&[1, 1]));
        let h1 = hcomplete(1, &a);
        assert_eq!(h1.coeff_of(&[1, 0]).unwrap(), QLaurent::one());
        assert_eq!(h1.coeff_of(&[0, 1]).unwrap(), QLaurent::one());
        let h2 = hcomplete(2, &a);
        assert_eq!(h2.num_terms(), 3);
        assert_eq!(h2.coeff_of(&[1, 1]).unwrap(), QLaurent::one());
    }

    #[test]
    fn h_matches_multiset_oracle() {
        let shapes: &[&[i64]] = &[&[2, 1], &[0, 2], &[1, 1, 1], &[3]];
        for parts in shapes {
            let a = Alphabet::plain(&wc(parts));
            for r in 0..=4 {
                assert_eq!(
                    hcomplete(r, &a),
                    hcomplete_by_multisets(r, &a),
                    "a={parts:?}, r={r}"
                );
            }
        }
        let aug = Alphabet::augmented(0, &wc(&[1, 2])).unwrap();
        for r in 0..=3 {
            assert_eq!(hcomplete(r, &aug), hcomplete_by_multisets(r, &aug));
        }
    }

    #[test]
    fn h_is_homogeneous() {
        let a = Alphabet::augmented(1, &wc(&[2, 2])).unwrap();
        for r in 0..=4 {
            assert!(hcomplete(r, &a).is_homogeneous_of_degree(r));
        }
    }
}
