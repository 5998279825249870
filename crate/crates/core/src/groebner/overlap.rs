use num_traits::One;

use crate::freealg::{NcPolynomial, Scalar, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OverlapKind {
    /// `u · right = left · v` with a proper suffix of `u` equal to a proper prefix of `v`.
    LeftRight,
    /// `v = left · u · right`.
    Inclusion,
}

/// An ambiguity between two leading words `u` (first) and `v` (second).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverlapSeed {
    pub kind: OverlapKind,
    pub left: Word,
    pub right: Word,
}

impl OverlapSeed {
    /// The word on which the two one-step rewrites disagree.
    pub fn ambiguity(&self, u: &Word, v: &Word) -> Word {
        match self.kind {
            OverlapKind::LeftRight => u.concat(&self.right),
            OverlapKind::Inclusion => v.clone(),
        }
    }
}

/// An ambiguity between basis elements `i` and `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub i: usize,
    pub j: usize,
    pub seed: OverlapSeed,
}

/// All proper left-right overlaps of `u` followed by `v`, and every
/// occurrence of `u` inside `v` other than `u = v` itself.
pub fn overlaps_of(u: &Word, v: &Word) -> Vec<OverlapSeed> {
    assert!(!u.is_one() && !v.is_one(), "overlaps are defined for nonempty words");
    let (lu, lv) = (u.degree(), v.degree());
    let mut out = Vec::new();
    // shared length k: suffix of u of length k equals prefix of v of length k
    for k in 1..lu.min(lv) {
        if u.letters()[lu - k..] == v.letters()[..k] {
            out.push(OverlapSeed {
                kind: OverlapKind::LeftRight,
                left: u.prefix(lu - k),
                right: v.suffix(lv - k),
            });
        }
    }
    if lu <= lv {
        for (left, right) in v.occurrences(u) {
            if left.is_one() && right.is_one() {
                continue;
            }
            out.push(OverlapSeed {
                kind: OverlapKind::Inclusion,
                left,
                right,
            });
        }
    }
    out
}

/// Difference of the two one-step rewrites of the ambiguity word, each input
/// first normalized to be monic.
pub fn s_polynomial(g1: &NcPolynomial, g2: &NcPolynomial, seed: &OverlapSeed) -> NcPolynomial {
    let c1 = g1.lc().expect("s_polynomial of zero").recip();
    let c2 = g2.lc().expect("s_polynomial of zero").recip();
    let one = Word::one();
    match seed.kind {
        OverlapKind::LeftRight => {
            let a = g1.sandwich(&c1, &one, &seed.right);
            let b = g2.sandwich(&c2, &seed.left, &one);
            a.add_scaled(&-Scalar::one(), &b)
        }
        OverlapKind::Inclusion => {
            let a = g2.scale(&c2);
            let b = g1.sandwich(&c1, &seed.left, &seed.right);
            a.add_scaled(&-Scalar::one(), &b)
        }
    }
}

/// Every ambiguity among the leading words of `basis`, including
/// self-overlaps and equal leading words of distinct elements.
pub fn all_overlaps(basis: &[NcPolynomial]) -> Vec<Overlap> {
    let lms: Vec<Option<&Word>> = basis.iter().map(|g| g.lm().ok()).collect();
    let mut out = Vec::new();
    for (i, u) in lms.iter().enumerate() {
        let Some(u) = u else { continue };
        for (j, v) in lms.iter().enumerate() {
            let Some(v) = v else { continue };
            if u.is_one() || v.is_one() {
                // 1 divides everything: v = 1 · 1 · v
                if i < j {
                    let (small, big, word) = if u.is_one() { (i, j, *v) } else { (j, i, *u) };
                    let seed = OverlapSeed {
                        kind: OverlapKind::Inclusion,
                        left: Word::one(),
                        right: word.clone(),
                    };
                    out.push(Overlap { i: small, j: big, seed });
                }
                continue;
            }
            for seed in overlaps_of(u, v) {
                out.push(Overlap { i, j, seed });
            }
            if i < j && u == v {
                out.push(Overlap {
                    i,
                    j,
                    seed: OverlapSeed {
                        kind: OverlapKind::Inclusion,
                        left: Word::one(),
                        right: Word::one(),
                    },
                });
            }
        }
    }
    out
}
