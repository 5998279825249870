//! Ufnarovski graphs and chain graphs of obstruction sets, and the decision
//! procedures read off them: growth, Noetherianity, (semi)primeness and
//! global-dimension bounds for the monomial algebra `R/⟨Ω⟩`.

mod chain;
mod ufnarovski;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use chain::{global_dim_bound, n_chains, ChainGraph, ChainSet, GlDimBound};
pub use ufnarovski::{Edge, GraphConvention, UfnarovskiGraph};

use crate::freealg::Word;
use crate::monoideal::{normal_words, ObstructionSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("word {0:?} contains an obstruction")]
    NotNormal(Word),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "degree", rename_all = "snake_case")]
pub enum GrowthClass {
    FiniteDimensional,
    /// Polynomial growth; carries the Gelfand–Kirillov dimension.
    Polynomial(usize),
    Exponential,
}

impl GrowthClass {
    /// GK dimension, `None` for exponential growth.
    pub fn gk_dimension(&self) -> Option<usize> {
        match self {
            GrowthClass::FiniteDimensional => Some(0),
            GrowthClass::Polynomial(d) => Some(*d),
            GrowthClass::Exponential => None,
        }
    }
}

/// Strongly connected components with the per-component data the decision
/// procedures need. Components are listed sinks first.
#[derive(Debug, Clone)]
pub struct Components {
    pub of_vertex: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    /// Edges with both ends inside the component (loops included).
    pub internal_edges: Vec<usize>,
    /// Component-level successor sets.
    pub successors: Vec<Vec<usize>>,
}

impl Components {
    pub fn of(g: &UfnarovskiGraph) -> Self {
        let mut pg: DiGraph<(), ()> = DiGraph::with_capacity(g.vertices().len(), g.edges().len());
        for _ in g.vertices() {
            pg.add_node(());
        }
        for e in g.edges() {
            pg.add_edge(NodeIndex::new(e.from), NodeIndex::new(e.to), ());
        }
        let sccs = tarjan_scc(&pg);
        let mut of_vertex = vec![0; g.vertices().len()];
        let members: Vec<Vec<usize>> = sccs
            .iter()
            .map(|c| {
                let mut m: Vec<usize> = c.iter().map(|v| v.index()).collect();
                m.sort_unstable();
                m
            })
            .collect();
        for (ci, m) in members.iter().enumerate() {
            for &v in m {
                of_vertex[v] = ci;
            }
        }
        let mut internal_edges = vec![0; members.len()];
        let mut successors = vec![Vec::new(); members.len()];
        for e in g.edges() {
            let (a, b) = (of_vertex[e.from], of_vertex[e.to]);
            if a == b {
                internal_edges[a] += 1;
            } else if !successors[a].contains(&b) {
                successors[a].push(b);
            }
        }
        Components {
            of_vertex,
            members,
            internal_edges,
            successors,
        }
    }

    /// Contains at least one cycle.
    pub fn is_cyclic(&self, c: usize) -> bool {
        self.internal_edges[c] > 0
    }

    /// Is exactly one simple cycle.
    pub fn is_simple_cycle(&self, c: usize) -> bool {
        self.is_cyclic(c) && self.internal_edges[c] == self.members[c].len()
    }
}

/// Finite iff acyclic; exponential iff two distinct cycles share a vertex
/// (a cyclic component with more edges than vertices); otherwise polynomial
/// of degree equal to the largest number of cycles one path can traverse.
pub fn classify_growth(g: &UfnarovskiGraph) -> GrowthClass {
    let comps = Components::of(g);
    let n = comps.members.len();
    if (0..n).any(|c| comps.is_cyclic(c) && !comps.is_simple_cycle(c)) {
        return GrowthClass::Exponential;
    }
    // tarjan lists sinks first, so successors are finished before their sources
    let mut best = vec![0usize; n];
    for c in 0..n {
        let below = comps.successors[c].iter().map(|&s| best[s]).max().unwrap_or(0);
        best[c] = below + usize::from(comps.is_cyclic(c));
    }
    match best.into_iter().max().unwrap_or(0) {
        0 => GrowthClass::FiniteDimensional,
        d => GrowthClass::Polynomial(d),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoetherianVerdict {
    pub left: bool,
    pub right: bool,
    pub weak: bool,
}

/// Right: no edge leaves any cycle. Left: no edge enters any cycle.
/// Weak: no cycle has edges both entering and leaving it.
///
/// A cycle inside a component that is not a single simple cycle always has
/// both an edge leaving it and one entering it, so such components fail all
/// three tests.
pub fn noetherian_test(g: &UfnarovskiGraph) -> NoetherianVerdict {
    let comps = Components::of(g);
    let mut verdict = NoetherianVerdict {
        left: true,
        right: true,
        weak: true,
    };
    for c in 0..comps.members.len() {
        if !comps.is_cyclic(c) {
            continue;
        }
        if !comps.is_simple_cycle(c) {
            return NoetherianVerdict {
                left: false,
                right: false,
                weak: false,
            };
        }
        let leaves = g
            .edges()
            .iter()
            .any(|e| comps.of_vertex[e.from] == c && comps.of_vertex[e.to] != c);
        let enters = g
            .edges()
            .iter()
            .any(|e| comps.of_vertex[e.to] == c && comps.of_vertex[e.from] != c);
        verdict.right &= !leaves;
        verdict.left &= !enters;
        verdict.weak &= !(leaves && enters);
    }
    verdict
}

/// Vertices lying on some cycle.
pub fn cyclic_vertices(g: &UfnarovskiGraph) -> Vec<Word> {
    let comps = Components::of(g);
    g.vertices()
        .iter()
        .enumerate()
        .filter(|(v, _)| comps.is_cyclic(comps.of_vertex[*v]))
        .map(|(_, w)| w.clone())
        .collect()
}

/// A normal word `v ≠ 1` is cyclic when `d(v) ≤ ℓ−1` and it is a right-hand
/// segment of a cyclic vertex, or when `d(v) > ℓ−1` and its route (the walk
/// through its consecutive length-`ℓ−1` windows) lies on a closed walk.
pub fn is_cyclic_monomial(v: &Word, g: &UfnarovskiGraph, omega: &ObstructionSet) -> Result<bool, GraphError> {
    if !omega.is_normal(v) {
        return Err(GraphError::NotNormal(v.clone()));
    }
    if v.is_one() {
        return Ok(false);
    }
    let comps = Components::of(g);
    Ok(cyclic_with(v, g, &comps))
}

fn cyclic_with(v: &Word, g: &UfnarovskiGraph, comps: &Components) -> bool {
    let k = g.base_degree();
    if v.degree() <= k {
        return g
            .vertices()
            .iter()
            .enumerate()
            .any(|(i, c)| comps.is_cyclic(comps.of_vertex[i]) && c.ends_with(v));
    }
    let mut component = None;
    for j in 0..=v.degree() - k {
        let window = v.subword(j, j + k);
        let Some(idx) = g.vertex_index(&window) else {
            return false;
        };
        let c = comps.of_vertex[idx];
        if !comps.is_cyclic(c) || component.is_some_and(|prev| prev != c) {
            return false;
        }
        component = Some(c);
    }
    true
}

/// Every normal `v` with `1 ≤ d(v) ≤ ℓ` is cyclic.
pub fn semiprime_test(omega: &ObstructionSet) -> bool {
    let g = UfnarovskiGraph::build(omega);
    let comps = Components::of(&g);
    normal_words(omega, g.ell())
        .into_iter()
        .skip(1)
        .flatten()
        .all(|v| cyclic_with(&v, &g, &comps))
}

/// (a) every normal `v` with `d(v) < ℓ−1` is a right-hand segment of a
/// vertex, and (b) every ordered pair of vertices (a vertex with itself
/// included) is joined by a route with at least one edge.
///
/// When no letter survives the quotient is the ground field, which is prime.
pub fn prime_test(omega: &ObstructionSet) -> bool {
    if omega.is_unit() {
        return false;
    }
    let g = UfnarovskiGraph::build(omega);
    let prec = omega.order().generators().precedence();
    if prec.iter().all(|&x| !omega.is_normal(&Word::letter(x))) {
        return true;
    }
    let k = g.base_degree();
    let short = normal_words(omega, k.saturating_sub(1));
    let segments_ok = k == 0
        || short
            .into_iter()
            .flatten()
            .all(|v| g.vertices().iter().any(|c| c.ends_with(&v)));
    if !segments_ok {
        return false;
    }
    let n = g.vertices().len();
    (0..n).all(|u| {
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = g.successors(u).collect();
        while let Some(t) = stack.pop() {
            if !seen[t] {
                seen[t] = true;
                stack.extend(g.successors(t));
            }
        }
        seen.into_iter().all(|s| s)
    })
}
