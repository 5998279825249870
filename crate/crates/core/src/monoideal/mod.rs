//! Monomial ideals `⟨Ω⟩`: normal words, Hilbert functions, dimension and
//! the rational Hilbert series of `R/⟨Ω⟩`.

mod matcher;
mod series;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use matcher::SubwordMatcher;
pub use series::RationalSeries;

use crate::freealg::{MonomialOrder, Word};
use crate::graphs::UfnarovskiGraph;
use matcher::START;

/// A reduced finite set of words: no element is a subword of another.
///
/// The empty word is allowed only on its own and stands for the unit ideal
/// (the zero algebra).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionSet {
    order: MonomialOrder,
    words: Vec<Word>,
}

impl ObstructionSet {
    pub fn new(order: &MonomialOrder, words: impl IntoIterator<Item = Word>) -> Self {
        reduce_obstructions(order, words)
    }

    pub fn empty(order: &MonomialOrder) -> Self {
        ObstructionSet {
            order: order.clone(),
            words: Vec::new(),
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn num_generators(&self) -> usize {
        self.order.num_generators()
    }

    /// The obstructions, ascending under the monomial order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Whether `⟨Ω⟩` is the whole free algebra.
    pub fn is_unit(&self) -> bool {
        self.words.first().is_some_and(Word::is_one)
    }

    /// `ℓ`, the maximal obstruction length (0 when empty).
    pub fn max_degree(&self) -> usize {
        self.words.iter().map(Word::degree).max().unwrap_or(0)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn matcher(&self) -> SubwordMatcher {
        SubwordMatcher::new(self.num_generators(), &self.words)
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        is_normal(w, self)
    }
}

/// Drops every word that contains another word of the set as a subword.
pub fn reduce_obstructions(order: &MonomialOrder, words: impl IntoIterator<Item = Word>) -> ObstructionSet {
    let mut words: Vec<Word> = words.into_iter().collect();
    words.sort_by(|a, b| order.compare(a, b));
    words.dedup();
    let mut kept: Vec<Word> = Vec::with_capacity(words.len());
    // ascending by length, so any divisor of w is already kept
    for w in words {
        if !kept.iter().any(|k| w.contains(k)) {
            kept.push(w);
        }
    }
    ObstructionSet {
        order: order.clone(),
        words: kept,
    }
}

/// True iff no obstruction occurs in `w`.
pub fn is_normal(w: &Word, omega: &ObstructionSet) -> bool {
    !omega.words.iter().any(|u| w.contains(u))
}

/// Normal words of each degree `0..=d`, each list ascending under the order.
///
/// Built breadth-first: a degree-`p` list is the set of right extensions of
/// the degree-`p−1` list that keep the subword automaton out of a match.
pub fn normal_words(omega: &ObstructionSet, d: usize) -> Vec<Vec<Word>> {
    let m = omega.matcher();
    let prec = omega.order.generators().precedence().to_vec();
    let mut out: Vec<Vec<Word>> = Vec::with_capacity(d + 1);
    let mut frontier: Vec<(Word, usize)> = if m.is_dead(START) {
        Vec::new()
    } else {
        vec![(Word::one(), START)]
    };
    for p in 0..=d {
        out.push(frontier.iter().map(|(w, _)| w.clone()).collect());
        if p == d {
            break;
        }
        let mut next = Vec::new();
        // extending a lex-sorted list letter by letter in precedence order
        // keeps the next degree lex-sorted
        for (w, s) in &frontier {
            for &x in &prec {
                let t = m.step(*s, x);
                if !m.is_dead(t) {
                    next.push((w.concat(&Word::letter(x)), t));
                }
            }
        }
        frontier = next;
    }
    out
}

/// Whether some word `w` makes `u·w·v` normal. When none exists, `u` and `v`
/// generate ideals with zero product in `R/⟨Ω⟩`.
pub fn bridge_exists(omega: &ObstructionSet, u: &Word, v: &Word) -> bool {
    let m = omega.matcher();
    let mut s = START;
    if m.is_dead(s) {
        return false;
    }
    for &x in u.letters() {
        s = m.step(s, x);
        if m.is_dead(s) {
            return false;
        }
    }
    let mut seen = vec![false; m.num_states()];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(q) = stack.pop() {
        let mut t = q;
        if v.letters().iter().all(|&x| {
            t = m.step(t, x);
            !m.is_dead(t)
        }) {
            return true;
        }
        for (_, r) in m.live_successors(q) {
            if !seen[r] {
                seen[r] = true;
                stack.push(r);
            }
        }
    }
    false
}

/// Dimensions of the homogeneous slices of `R/⟨Ω⟩` in degrees `0..=d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub counts: Vec<BigUint>,
}

impl HilbertData {
    pub fn get(&self, p: usize) -> Option<&BigUint> {
        self.counts.get(p)
    }

    pub fn as_u64(&self) -> Vec<u64> {
        self.counts
            .iter()
            .map(|c| u64::try_from(c).unwrap_or(u64::MAX))
            .collect()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// Counts normal words per degree by dynamic programming over the automaton
/// states, without materializing the words.
pub fn hilbert_function(omega: &ObstructionSet, d: usize) -> HilbertData {
    let m = omega.matcher();
    let states = m.num_states();
    let mut counts = Vec::with_capacity(d + 1);
    let mut cur = vec![BigUint::zero(); states];
    if !m.is_dead(START) {
        cur[START] = BigUint::one();
    }
    for p in 0..=d {
        counts.push(cur.iter().sum());
        if p == d {
            break;
        }
        let mut next = vec![BigUint::zero(); states];
        for (s, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (_, t) in m.live_successors(s) {
                next[t] += c;
            }
        }
        cur = next;
    }
    HilbertData { counts }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuotientDimension {
    Finite(BigUint),
    Infinite,
}

/// `dim R/⟨Ω⟩`: finite exactly when pattern-free words have bounded length.
pub fn quotient_dimension(omega: &ObstructionSet) -> QuotientDimension {
    let m = omega.matcher();
    if m.has_live_cycle() {
        return QuotientDimension::Infinite;
    }
    // an acyclic automaton bounds normal word length by its state count
    let h = hilbert_function(omega, m.num_states());
    QuotientDimension::Finite(h.total())
}

/// Closed rational form of the Hilbert series of `R/⟨Ω⟩`.
///
/// Degrees `p ≥ ℓ−1` are path counts in the Ufnarovski graph, so their
/// generating function is `1ᵀ(I − tM)⁻¹1 · t^{ℓ−1}` for the adjacency matrix
/// `M`. The lower degrees are added as an explicit polynomial.
pub fn hilbert_series(omega: &ObstructionSet) -> RationalSeries {
    if omega.is_unit() {
        return series::canonical(Vec::new(), vec![BigRational::one()]);
    }
    let graph = UfnarovskiGraph::build(omega);
    let n = graph.vertices().len();
    let base = graph.base_degree();

    let mut adj = vec![vec![BigInt::zero(); n]; n];
    for e in graph.edges() {
        adj[e.from][e.to] += 1;
    }
    let den = series::reversed_charpoly(&adj);

    // a_k = 1ᵀ M^k 1 for k < n determine the numerator P = Q · Σ a_k t^k mod t^n
    let mut walks: Vec<BigInt> = vec![BigInt::one(); n];
    let mut tail: Vec<BigRational> = Vec::with_capacity(n);
    for _ in 0..n {
        tail.push(BigRational::from_integer(walks.iter().sum()));
        let mut next = vec![BigInt::zero(); n];
        for e in graph.edges() {
            next[e.from] += &walks[e.to];
        }
        walks = next;
    }
    let mut p = series::mul(&den, &tail);
    p.truncate(n);

    let low = hilbert_function(omega, base.saturating_sub(1));
    let low: Vec<BigRational> = if base == 0 {
        Vec::new()
    } else {
        low.counts
            .iter()
            .map(|c| BigRational::from_integer(BigInt::from(c.clone())))
            .collect()
    };
    let mut shifted = vec![BigRational::zero(); base];
    shifted.extend(p);
    let num = series::add(&series::mul(&low, &den), &shifted);
    series::canonical(num, den)
}
