use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::freealg::{Letter, Word};
use crate::monoideal::{normal_words, ObstructionSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphConvention {
    /// Built exactly from the definition.
    Standard,
    /// `Ω = ∅`: the complete graph on the letters, taken with `ℓ = 2`.
    FreeAlgebra,
    /// `ℓ = 1`: a single vertex `1` with one loop per surviving letter.
    SingleLetters,
    /// `1 ∈ Ω`: the zero algebra, no vertices.
    ZeroAlgebra,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// The letter appended to the source word.
    pub letter: Letter,
}

/// The Ufnarovski graph `Γ(Ω)`: vertices are the normal words of length
/// `ℓ−1`, and `v → v'` is labelled `x` when `v·x` is normal and ends in `v'`.
///
/// Walks of length `k` correspond bijectively to normal words of length
/// `ℓ−1+k`.
#[derive(Debug, Clone)]
pub struct UfnarovskiGraph {
    ell: usize,
    vertices: Vec<Word>,
    index: HashMap<Word, usize>,
    edges: Vec<Edge>,
    convention: GraphConvention,
}

impl UfnarovskiGraph {
    pub fn build(omega: &ObstructionSet) -> Self {
        if omega.is_unit() {
            return UfnarovskiGraph {
                ell: 0,
                vertices: Vec::new(),
                index: HashMap::new(),
                edges: Vec::new(),
                convention: GraphConvention::ZeroAlgebra,
            };
        }
        let (ell, convention) = match omega.max_degree() {
            0 => (2, GraphConvention::FreeAlgebra),
            1 => (1, GraphConvention::SingleLetters),
            l => (l, GraphConvention::Standard),
        };
        let vertices = normal_words(omega, ell - 1).pop().unwrap_or_default();
        let index: HashMap<Word, usize> = vertices.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let matcher = omega.matcher();
        let prec = omega.order().generators().precedence();
        let mut edges = Vec::new();
        for (from, v) in vertices.iter().enumerate() {
            for &x in prec {
                let word = v.concat(&Word::letter(x));
                if matcher.matches(&word) {
                    continue;
                }
                let target = word.suffix(ell - 1);
                let to = index[&target];
                edges.push(Edge { from, to, letter: x });
            }
        }
        UfnarovskiGraph {
            ell,
            vertices,
            index,
            edges,
            convention,
        }
    }

    /// `ℓ` as used for the construction (2 for the free-algebra convention).
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Length of the vertex words, `ℓ−1`.
    pub fn base_degree(&self) -> usize {
        self.ell.saturating_sub(1)
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn convention(&self) -> GraphConvention {
        self.convention
    }

    pub fn vertex_index(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.from == v).map(|e| e.to)
    }

    /// Number of walks with exactly `k` edges.
    pub fn count_walks(&self, k: usize) -> num_bigint::BigUint {
        use num_bigint::BigUint;
        use num_traits::One;
        let mut walks = vec![BigUint::one(); self.vertices.len()];
        for _ in 0..k {
            let mut next = vec![BigUint::default(); self.vertices.len()];
            for e in &self.edges {
                next[e.from] += &walks[e.to];
            }
            walks = next;
        }
        walks.into_iter().sum()
    }
}
