//! Shared fixtures and independent oracles for the integration tests.
//!
//! The oracles here avoid the library's completion, automaton and graph
//! code: they enumerate words directly and do dense Gaussian elimination
//! over ℚ.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use gradelift::freealg::{GeneratorSet, MonomialOrder, NcPolynomial, Scalar, Term, Word};
use gradelift::groebner::Presentation;
use gradelift::monoideal::ObstructionSet;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn order(names: &[&str]) -> MonomialOrder {
    MonomialOrder::deglex(Arc::new(GeneratorSet::new(names.iter().copied()).unwrap()))
}

pub fn order_n(n: usize) -> MonomialOrder {
    let names: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    MonomialOrder::deglex(Arc::new(GeneratorSet::new(names).unwrap()))
}

pub fn w(s: &[u32]) -> Word {
    Word::new(s.to_vec())
}

pub fn q(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Polynomial from `(coefficient, letters)` pairs.
pub fn poly(ord: &MonomialOrder, terms: &[(i64, &[u32])]) -> NcPolynomial {
    NcPolynomial::from_terms(ord, terms.iter().map(|(c, s)| Term::new(q(*c), w(s))))
}

pub fn omega(ord: &MonomialOrder, words: &[&[u32]]) -> ObstructionSet {
    ObstructionSet::new(ord, words.iter().map(|s| w(s)))
}

/// All words of length exactly `p` over `n` letters, lexicographic by index.
pub fn all_words(n: usize, p: usize) -> Vec<Word> {
    let mut out = vec![Word::one()];
    for _ in 0..p {
        out = out
            .into_iter()
            .flat_map(|u| (0..n as u32).map(move |x| u.concat(&Word::letter(x))))
            .collect();
    }
    out
}

/// Naive subword test by scanning every window.
pub fn naive_contains(word: &Word, pattern: &Word) -> bool {
    let (a, b) = (word.letters(), pattern.letters());
    b.len() <= a.len() && (0..=a.len() - b.len()).any(|i| &a[i..i + b.len()] == b)
}

pub fn naive_normal(word: &Word, obstructions: &[Word]) -> bool {
    !obstructions.iter().any(|o| naive_contains(word, o))
}

/// Normal-word counts per degree by exhaustive enumeration.
pub fn brute_counts(n: usize, obstructions: &[Word], d: usize) -> Vec<u64> {
    (0..=d)
        .map(|p| all_words(n, p).iter().filter(|u| naive_normal(u, obstructions)).count() as u64)
        .collect()
}

/// Dense row echelon form over ℚ with columns indexed by words listed in
/// descending monomial order, so each pivot column is a leading word.
pub struct Echelon {
    columns: Vec<Word>,
    index: HashMap<Word, usize>,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    /// `columns` must be sorted descending under the order.
    pub fn new(columns: Vec<Word>) -> Self {
        let index = columns.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Echelon {
            columns,
            index,
            rows: Vec::new(),
        }
    }

    /// Reduces `f` against the current rows and keeps the remainder if it is
    /// nonzero. Returns whether the rank grew.
    pub fn insert(&mut self, f: &NcPolynomial) -> bool {
        let mut v = vec![Scalar::zero(); self.columns.len()];
        for t in f.terms() {
            v[self.index[&t.word]] = t.coeff.clone();
        }
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let c = v[*pivot].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Scalar::one() / &v[pivot];
        for x in v.iter_mut() {
            *x *= &inv;
        }
        // keep rows fully reduced against the new pivot
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let c = row[pivot].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.rows.iter().map(|(p, _)| self.columns[*p].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, f: &NcPolynomial) -> bool {
        let mut probe = Echelon {
            columns: self.columns.clone(),
            index: self.index.clone(),
            rows: self.rows.clone(),
        };
        !probe.insert(f)
    }
}

/// Every word of degree at most `d`, descending under `ord`.
pub fn columns_up_to(ord: &MonomialOrder, d: usize) -> Vec<Word> {
    let mut cols: Vec<Word> = (0..=d).flat_map(|p| all_words(ord.num_generators(), p)).collect();
    ord.sort_words(&mut cols);
    cols.reverse();
    cols
}

/// Spans `{u·g·v : g a relation, deg(u·g·v) ≤ d}` and returns, per degree
/// `0..=d`, how many distinct leading words the span has in that degree.
pub fn ideal_slice_dims(p: &Presentation, d: usize) -> Vec<usize> {
    let ord = p.order();
    let n = ord.num_generators();
    let mut ech = Echelon::new(columns_up_to(ord, d));
    for g in p.relations() {
        let gd = g.degree().expect("relations are nonzero");
        if gd > d {
            continue;
        }
        for left_len in 0..=d - gd {
            for right_len in 0..=d - gd - left_len {
                for u in all_words(n, left_len) {
                    for v in all_words(n, right_len) {
                        ech.insert(&g.sandwich(&Scalar::one(), &u, &v));
                    }
                }
            }
        }
    }
    let mut dims = vec![0; d + 1];
    for lw in ech.leading_words() {
        dims[lw.degree()] += 1;
    }
    dims
}

/// Random polynomial with `terms` terms of degree `1..=max_degree` and
/// coefficients in `-2..=2`; may come out zero.
pub fn random_poly(rng: &mut ChaCha8Rng, ord: &MonomialOrder, terms: usize, max_degree: usize) -> NcPolynomial {
    let n = ord.num_generators() as u32;
    let ts: Vec<Term> = (0..terms)
        .map(|_| {
            let deg = rng.gen_range(0..=max_degree);
            let letters: Vec<u32> = (0..deg).map(|_| rng.gen_range(0..n)).collect();
            Term::new(q(rng.gen_range(-2..=2)), Word::new(letters))
        })
        .collect();
    NcPolynomial::from_terms(ord, ts)
}

/// Random presentation over `n` letters with `1..=max_relations` nonzero,
/// nonconstant relations of degree at most `max_degree`.
pub fn random_presentation(rng: &mut ChaCha8Rng, n: usize, max_relations: usize, max_degree: usize) -> Presentation {
    let ord = order_n(n);
    let count = rng.gen_range(1..=max_relations);
    let mut rels = Vec::new();
    while rels.len() < count {
        let terms = rng.gen_range(1..=3);
        let f = random_poly(rng, &ord, terms, max_degree);
        if f.degree().is_some_and(|d| d >= 1) {
            rels.push(f);
        }
    }
    Presentation::new(ord, rels).unwrap()
}

/// Random reduced obstruction set with words of length `1..=max_len`.
pub fn random_obstructions(rng: &mut ChaCha8Rng, n: usize, max_words: usize, max_len: usize) -> ObstructionSet {
    let ord = order_n(n);
    let count = rng.gen_range(1..=max_words);
    let words: Vec<Word> = (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            Word::new((0..len).map(|_| rng.gen_range(0..n as u32)).collect())
        })
        .collect();
    ObstructionSet::new(&ord, words)
}
