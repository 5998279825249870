use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::freealg::{Letter, MonomialOrder, Word};
use crate::monoideal::ObstructionSet;

/// The graph of chains `Γ_C(Ω)`.
///
/// Vertex 0 is `1`; the others are the surviving letters and the proper
/// suffixes of the obstructions. Letters that are themselves obstructions
/// are removed from the alphabet first (they vanish in the quotient), so the
/// graph is that of the remaining obstructions over the remaining letters.
#[derive(Debug, Clone)]
pub struct ChainGraph {
    vertices: Vec<Word>,
    edges: Vec<(usize, usize)>,
    alphabet: Vec<Letter>,
    obstructions: Vec<Word>,
}

impl ChainGraph {
    pub fn build(omega: &ObstructionSet) -> Self {
        let order = omega.order();
        if omega.is_unit() {
            return ChainGraph {
                vertices: vec![Word::one()],
                edges: Vec::new(),
                alphabet: Vec::new(),
                obstructions: Vec::new(),
            };
        }
        let alphabet: Vec<Letter> = order
            .generators()
            .precedence()
            .iter()
            .copied()
            .filter(|&x| !omega.contains(&Word::letter(x)))
            .collect();
        let obstructions: Vec<Word> = omega.words().iter().filter(|w| w.degree() >= 2).cloned().collect();

        let mut rest: BTreeSet<(usize, Vec<usize>, Word)> = BTreeSet::new();
        let mut insert = |w: Word| {
            let (d, key) = order.sort_key(&w);
            rest.insert((d, key, w));
        };
        for &x in &alphabet {
            insert(Word::letter(x));
        }
        for w in &obstructions {
            for k in 1..w.degree() {
                insert(w.suffix(k));
            }
        }
        let mut vertices = vec![Word::one()];
        vertices.extend(rest.into_iter().map(|(_, _, w)| w));

        let mut edges = Vec::new();
        for (i, x) in vertices.iter().enumerate().skip(1) {
            if x.degree() == 1 && alphabet.contains(&x.letters()[0]) {
                edges.push((0, i));
            }
        }
        for (i, u) in vertices.iter().enumerate().skip(1) {
            for (j, v) in vertices.iter().enumerate().skip(1) {
                let uv = u.concat(v);
                // uv = w or uv = s·w, and that is the only occurrence of
                // any obstruction in uv
                let hits: usize = obstructions.iter().map(|w| uv.occurrences(w).len()).sum();
                if hits == 1 && obstructions.iter().any(|w| uv.ends_with(w)) {
                    edges.push((i, j));
                }
            }
        }
        ChainGraph {
            vertices,
            edges,
            alphabet,
            obstructions,
        }
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Letters that survive in the quotient, in precedence order.
    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    /// The obstructions of length at least 2 that drive the edge rule.
    pub fn obstructions(&self) -> &[Word] {
        &self.obstructions
    }

    fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.0 == v).map(|e| e.1)
    }
}

/// The `n`-chains: words read along paths with `n+1` edges starting at `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSet {
    pub n: i64,
    pub chains: Vec<Word>,
}

pub fn n_chains(cg: &ChainGraph, n: i64, order: &MonomialOrder) -> ChainSet {
    assert!(n >= -1, "chains are indexed from -1");
    let steps = (n + 1) as usize;
    let mut found: BTreeSet<(usize, Vec<usize>, Word)> = BTreeSet::new();
    // (vertex, remaining steps, word so far)
    let mut stack: Vec<(usize, usize, Word)> = vec![(0, steps, Word::one())];
    while let Some((v, left, word)) = stack.pop() {
        if left == 0 {
            let (d, key) = order.sort_key(&word);
            found.insert((d, key, word));
            continue;
        }
        for t in cg.successors(v) {
            stack.push((t, left - 1, word.concat(&cg.vertices[t])));
        }
    }
    ChainSet {
        n,
        chains: found.into_iter().map(|(_, _, w)| w).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum GlDimBound {
    /// Global dimension is at most the carried value.
    Finite(usize),
    /// Chains of every length exist; no bound follows.
    Unbounded,
}

/// `Finite(d)` for the least `d ≥ 0` with no `d`-chains, or `Unbounded` if a
/// cycle is reachable from `1`.
pub fn global_dim_bound(cg: &ChainGraph) -> GlDimBound {
    let n = cg.vertices.len();
    // longest path from the root by DFS with cycle detection on reachable part
    let mut color = vec![0u8; n];
    let mut longest = vec![0usize; n];
    let mut stack: Vec<(usize, bool)> = vec![(0, false)];
    while let Some((v, done)) = stack.pop() {
        if done {
            longest[v] = cg.successors(v).map(|t| longest[t] + 1).max().unwrap_or(0);
            color[v] = 2;
            continue;
        }
        if color[v] == 2 {
            continue;
        }
        color[v] = 1;
        stack.push((v, true));
        for t in cg.successors(v) {
            match color[t] {
                0 => stack.push((t, false)),
                1 => return GlDimBound::Unbounded,
                _ => {}
            }
        }
    }
    GlDimBound::Finite(longest[0])
}
