//! Division, ambiguities and degree-truncated completion in the free algebra.

mod complete;
mod overlap;
mod reduce;

use std::sync::Arc;

use thiserror::Error;

pub use complete::{complete, is_groebner_up_to};
pub use overlap::{all_overlaps, overlaps_of, s_polynomial, Overlap, OverlapKind, OverlapSeed};
pub use reduce::normal_form;

use crate::freealg::{GeneratorSet, Letter, MonomialOrder, NcPolynomial, Word};
use crate::monoideal::ObstructionSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("relation {index} is zero")]
    ZeroRelation { index: usize },
    #[error("relation {index} is not over the presentation's generators and order")]
    OrderMismatch { index: usize },
    #[error("degree bound {bound} is smaller than relation degree {relation_degree}")]
    DegreeBoundTooSmall { relation_degree: usize, bound: usize },
}

/// Generators, relations and the monomial order of `A = R/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    order: MonomialOrder,
    relations: Vec<NcPolynomial>,
}

impl Presentation {
    /// Rejects zero relations and drops exact duplicates, keeping the first
    /// occurrence.
    pub fn new(order: MonomialOrder, relations: Vec<NcPolynomial>) -> Result<Self, GroebnerError> {
        let mut kept: Vec<NcPolynomial> = Vec::with_capacity(relations.len());
        for (index, r) in relations.into_iter().enumerate() {
            if r.is_zero() {
                return Err(GroebnerError::ZeroRelation { index });
            }
            if r.order() != &order {
                return Err(GroebnerError::OrderMismatch { index });
            }
            if !kept.contains(&r) {
                kept.push(r);
            }
        }
        Ok(Presentation { order, relations: kept })
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &Arc<GeneratorSet> {
        self.order.generators()
    }

    pub fn relations(&self) -> &[NcPolynomial] {
        &self.relations
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.relations.iter().filter_map(NcPolynomial::degree).max()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    /// Every ambiguity was resolved: the basis is a reduced Gröbner basis.
    Complete,
    /// Ambiguities longer than the bound remain unresolved.
    CompleteUpTo(usize),
}

/// A monic, interreduced basis sorted by ascending leading word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerResult {
    pub basis: Vec<NcPolynomial>,
    pub degree_bound: usize,
    pub status: Status,
    pub order: MonomialOrder,
}

impl GroebnerResult {
    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.basis
            .iter()
            .map(|g| g.lm().expect("basis is nonzero").clone())
            .collect()
    }

    pub fn normal_form(&self, f: &NcPolynomial) -> NcPolynomial {
        normal_form(f, &self.basis)
    }
}

/// Head terms of the basis. For a complete basis these generate `⟨HT(I)⟩`,
/// so `R/⟨HT(G)⟩` presents the associated graded algebra.
pub fn ht_generators(g: &GroebnerResult) -> Vec<NcPolynomial> {
    g.basis.iter().map(|p| p.ht().expect("basis is nonzero")).collect()
}

/// The reduced set `LM(G)`.
pub fn lm_obstructions(g: &GroebnerResult) -> ObstructionSet {
    ObstructionSet::new(&g.order, g.leading_words())
}

/// True iff `LM(G)` is exactly `{XⱼXᵢ : Xᵢ ≺ Xⱼ}`, the leading words of a
/// PBW-type basis.
pub fn pbw_shape(g: &GroebnerResult) -> bool {
    let gens = g.order.generators();
    let prec = gens.precedence();
    let mut expected: Vec<Word> = Vec::new();
    for (a, &xi) in prec.iter().enumerate() {
        for &xj in &prec[a + 1..] {
            expected.push(Word::new(vec![xj as Letter, xi as Letter]));
        }
    }
    let mut actual = g.leading_words();
    g.order.sort_words(&mut actual);
    g.order.sort_words(&mut expected);
    actual == expected
}
