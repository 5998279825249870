use std::cmp::Ordering;
use std::sync::Arc;

use super::word::{Letter, Word};
use super::AlgebraError;

/// The alphabet `X₁,…,Xₙ` together with the base precedence of its letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    names: Vec<String>,
    /// Generator indices listed from smallest to largest.
    precedence: Vec<Letter>,
    /// Inverse of `precedence`: `rank[x]` is the position of `x` in it.
    rank: Vec<usize>,
}

impl GeneratorSet {
    /// Generators whose precedence equals declaration order.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let precedence = (0..names.len() as Letter).collect();
        Self::with_precedence(names, precedence)
    }

    pub fn with_precedence(names: Vec<String>, precedence: Vec<Letter>) -> Result<Self, AlgebraError> {
        if names.is_empty() {
            return Err(AlgebraError::NoGenerators);
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(AlgebraError::EmptyGeneratorName);
            }
            if names[..i].contains(name) {
                return Err(AlgebraError::DuplicateGenerator(name.clone()));
            }
        }
        let n = names.len();
        let mut rank = vec![usize::MAX; n];
        if precedence.len() != n {
            return Err(AlgebraError::InvalidPrecedence);
        }
        for (pos, &x) in precedence.iter().enumerate() {
            let slot = rank.get_mut(x as usize).ok_or(AlgebraError::InvalidPrecedence)?;
            if *slot != usize::MAX {
                return Err(AlgebraError::InvalidPrecedence);
            }
            *slot = pos;
        }
        Ok(GeneratorSet {
            names,
            precedence,
            rank,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Letter) -> &str {
        &self.names[x as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| i as Letter)
    }

    /// Letters in ascending precedence.
    pub fn precedence(&self) -> &[Letter] {
        &self.precedence
    }

    pub fn rank(&self, x: Letter) -> usize {
        self.rank[x as usize]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    DegLex,
}

/// A graded monomial ordering on the words over a generator set.
#[derive(Debug, Clone)]
pub struct MonomialOrder {
    kind: OrderKind,
    generators: Arc<GeneratorSet>,
}

impl PartialEq for MonomialOrder {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && (Arc::ptr_eq(&self.generators, &other.generators) || self.generators == other.generators)
    }
}

impl Eq for MonomialOrder {}

impl MonomialOrder {
    pub fn deglex(generators: Arc<GeneratorSet>) -> Self {
        MonomialOrder {
            kind: OrderKind::DegLex,
            generators,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn generators(&self) -> &Arc<GeneratorSet> {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Ordering {
        match self.kind {
            OrderKind::DegLex => u.degree().cmp(&v.degree()).then_with(|| {
                let gens = &self.generators;
                for (&a, &b) in u.letters().iter().zip(v.letters()) {
                    if a != b {
                        return gens.rank(a).cmp(&gens.rank(b));
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Key whose natural ordering coincides with [`MonomialOrder::compare`].
    pub fn sort_key(&self, w: &Word) -> (usize, Vec<usize>) {
        (
            w.degree(),
            w.letters().iter().map(|&x| self.generators.rank(x)).collect(),
        )
    }

    pub fn sort_words(&self, words: &mut [Word]) {
        words.sort_by(|a, b| self.compare(a, b));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> MonomialOrder {
        MonomialOrder::deglex(Arc::new(GeneratorSet::new(["X", "Y"]).unwrap()))
    }

    #[test]
    fn deglex_examples() {
        let ord = xy();
        let w = |s: &[Letter]| Word::new(s.to_vec());
        assert_eq!(ord.compare(&w(&[0]), &w(&[0, 1])), Ordering::Less);
        assert_eq!(ord.compare(&w(&[0, 1]), &w(&[1, 0])), Ordering::Less);
        assert_eq!(ord.compare(&w(&[1, 0]), &w(&[1, 0])), Ordering::Equal);
        assert_eq!(ord.compare(&Word::one(), &w(&[0])), Ordering::Less);
    }

    #[test]
    fn precedence_reverses_lex() {
        let gens = GeneratorSet::with_precedence(vec!["X".into(), "Y".into()], vec![1, 0]).unwrap();
        let ord = MonomialOrder::deglex(Arc::new(gens));
        let w = |s: &[Letter]| Word::new(s.to_vec());
        assert_eq!(ord.compare(&w(&[0, 1]), &w(&[1, 0])), Ordering::Greater);
        assert_eq!(ord.compare(&w(&[1]), &w(&[0])), Ordering::Less);
    }

    #[test]
    fn generator_validation() {
        assert_eq!(GeneratorSet::new(Vec::<String>::new()), Err(AlgebraError::NoGenerators));
        assert_eq!(
            GeneratorSet::new(["X", "X"]),
            Err(AlgebraError::DuplicateGenerator("X".into()))
        );
        assert_eq!(
            GeneratorSet::with_precedence(vec!["X".into(), "Y".into()], vec![0, 0]),
            Err(AlgebraError::InvalidPrecedence)
        );
        assert_eq!(
            GeneratorSet::with_precedence(vec!["X".into()], vec![3]),
            Err(AlgebraError::InvalidPrecedence)
        );
    }
}
