use std::fmt;

/// Index of a generator in declaration order.
pub type Letter = u32;

/// A monomial of the free monoid on the generators. The empty word is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(x: Letter) -> Self {
        Word(vec![x])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Monoid product `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `left · self · right`
    pub fn sandwich(&self, left: &Word, right: &Word) -> Word {
        let mut letters = Vec::with_capacity(left.0.len() + self.0.len() + right.0.len());
        letters.extend_from_slice(&left.0);
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&right.0);
        Word(letters)
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.subword(0, len)
    }

    pub fn suffix(&self, len: usize) -> Word {
        self.subword(self.0.len() - len, self.0.len())
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.0.ends_with(&other.0)
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.0.starts_with(&other.0)
    }

    /// Position of the leftmost occurrence of `pattern` as a contiguous subword.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.0.len() > self.0.len() {
            return None;
        }
        if pattern.is_one() {
            return Some(0);
        }
        self.0.windows(pattern.0.len()).position(|w| w == pattern.0.as_slice())
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        self.find(pattern).is_some()
    }

    /// Every factorization `self = left · pattern · right`, ordered by the
    /// length of `left`.
    pub fn occurrences(&self, pattern: &Word) -> Vec<(Word, Word)> {
        assert!(!pattern.is_one(), "occurrences of the empty word are not defined");
        let k = pattern.0.len();
        if k > self.0.len() {
            return Vec::new();
        }
        self.0
            .windows(k)
            .enumerate()
            .filter(|(_, w)| *w == pattern.0.as_slice())
            .map(|(i, _)| (self.prefix(i), self.subword(i + k, self.0.len())))
            .collect()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|x| format!("x{x}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[Letter]) -> Word {
        Word::new(s.to_vec())
    }

    #[test]
    fn concat_examples() {
        // X = 0, Y = 1
        assert_eq!(w(&[0]).concat(&w(&[1])), w(&[0, 1]));
        assert_eq!(Word::one().concat(&w(&[1, 0])), w(&[1, 0]));
        assert_eq!(w(&[0, 1]).concat(&w(&[0])), w(&[0, 1, 0]));
        assert_eq!(w(&[0, 1]).concat(&w(&[0])).degree(), 3);
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(w(&[0]).occurrences(&w(&[0])), vec![(Word::one(), Word::one())]);
        assert_eq!(w(&[1, 0, 1]).occurrences(&w(&[0])), vec![(w(&[1]), w(&[1]))]);
        assert_eq!(
            w(&[0, 0, 0]).occurrences(&w(&[0, 0])),
            vec![(Word::one(), w(&[0])), (w(&[0]), Word::one())]
        );
        assert!(w(&[0, 1, 0]).occurrences(&w(&[1, 1])).is_empty());
        assert!(w(&[0]).occurrences(&w(&[0, 0])).is_empty());
    }

    #[test]
    fn find_and_affixes() {
        let u = w(&[0, 1, 1, 0]);
        assert_eq!(u.find(&w(&[1, 1])), Some(1));
        assert_eq!(u.find(&w(&[0, 0])), None);
        assert!(u.starts_with(&w(&[0, 1])));
        assert!(u.ends_with(&w(&[1, 0])));
        assert_eq!(u.suffix(3), w(&[1, 1, 0]));
        assert_eq!(u.prefix(0), Word::one());
    }
}
