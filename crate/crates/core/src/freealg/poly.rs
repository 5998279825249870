use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::order::MonomialOrder;
use super::word::Word;
use super::AlgebraError;

pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub word: Word,
}

impl Term {
    pub fn new(coeff: Scalar, word: Word) -> Self {
        Term { coeff, word }
    }
}

/// Noncommutative polynomial with exact rational coefficients.
///
/// Terms are kept strictly descending under the attached order with no zero
/// coefficients, so the zero polynomial is the empty term list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPolynomial {
    terms: Vec<Term>,
    order: MonomialOrder,
}

impl NcPolynomial {
    pub fn zero(order: &MonomialOrder) -> Self {
        NcPolynomial {
            terms: Vec::new(),
            order: order.clone(),
        }
    }

    pub fn constant(order: &MonomialOrder, c: Scalar) -> Self {
        Self::monomial(order, c, Word::one())
    }

    pub fn monomial(order: &MonomialOrder, c: Scalar, word: Word) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term::new(c, word)]
        };
        NcPolynomial {
            terms,
            order: order.clone(),
        }
    }

    pub fn word(order: &MonomialOrder, word: Word) -> Self {
        Self::monomial(order, Scalar::one(), word)
    }

    /// Collects arbitrary terms: sorts, merges equal words, drops zeros.
    pub fn from_terms(order: &MonomialOrder, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().filter(|t| !t.coeff.is_zero()).collect();
        terms.sort_by(|a, b| order.compare(&b.word, &a.word));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.word == t.word => last.coeff += t.coeff,
                _ => out.push(t),
            }
            if out.last().is_some_and(|l| l.coeff.is_zero()) {
                out.pop();
            }
        }
        NcPolynomial {
            terms: out,
            order: order.clone(),
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lt(&self) -> Result<&Term, AlgebraError> {
        self.terms.first().ok_or(AlgebraError::ZeroPolynomial)
    }

    pub fn lm(&self) -> Result<&Word, AlgebraError> {
        self.lt().map(|t| &t.word)
    }

    pub fn lc(&self) -> Result<&Scalar, AlgebraError> {
        self.lt().map(|t| &t.coeff)
    }

    /// Word length of the leading monomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.first().map(|t| t.word.degree())
    }

    /// The homogeneous component of maximal word length.
    pub fn ht(&self) -> Result<NcPolynomial, AlgebraError> {
        let d = self.degree().ok_or(AlgebraError::ZeroPolynomial)?;
        let terms = self
            .terms
            .iter()
            .take_while(|t| t.word.degree() == d)
            .cloned()
            .collect();
        Ok(NcPolynomial {
            terms,
            order: self.order.clone(),
        })
    }

    /// Everything except the leading term.
    pub fn tail(&self) -> NcPolynomial {
        NcPolynomial {
            terms: self.terms.iter().skip(1).cloned().collect(),
            order: self.order.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|t| t.word.degree() == d),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms
            .binary_search_by(|t| self.order.compare(w, &t.word))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    pub fn scale(&self, c: &Scalar) -> NcPolynomial {
        if c.is_zero() {
            return Self::zero(&self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(&t.coeff * c, t.word.clone()))
            .collect();
        NcPolynomial {
            terms,
            order: self.order.clone(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> NcPolynomial {
        match self.terms.first() {
            Some(t) if !t.coeff.is_one() => self.scale(&t.coeff.recip()),
            _ => self.clone(),
        }
    }

    /// `c · left · self · right`
    pub fn sandwich(&self, c: &Scalar, left: &Word, right: &Word) -> NcPolynomial {
        if c.is_zero() {
            return Self::zero(&self.order);
        }
        // Multiplying every word on both sides by fixed words preserves the
        // strict descending order (order compatibility).
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(&t.coeff * c, t.word.sandwich(left, right)))
            .collect();
        NcPolynomial {
            terms,
            order: self.order.clone(),
        }
    }

    /// `self + c · other`, merging the two sorted term lists.
    pub fn add_scaled(&self, c: &Scalar, other: &NcPolynomial) -> NcPolynomial {
        debug_assert_eq!(self.order, other.order);
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match self.order.compare(&a.word, &b.word) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term::new(&b.coeff * c, b.word.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a.coeff + &b.coeff * c;
                    if !s.is_zero() {
                        out.push(Term::new(s, a.word.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|b| Term::new(&b.coeff * c, b.word.clone())));
        NcPolynomial {
            terms: out,
            order: self.order.clone(),
        }
    }

    pub fn mul_poly(&self, other: &NcPolynomial) -> NcPolynomial {
        debug_assert_eq!(self.order, other.order);
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                acc.push(Term::new(&a.coeff * &b.coeff, a.word.concat(&b.word)));
            }
        }
        Self::from_terms(&self.order, acc)
    }

    /// Words occurring in the polynomial, in descending order.
    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.iter().map(|t| &t.word)
    }
}

impl Add for &NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, rhs: &NcPolynomial) -> NcPolynomial {
        self.add_scaled(&Scalar::one(), rhs)
    }
}

impl Sub for &NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, rhs: &NcPolynomial) -> NcPolynomial {
        self.add_scaled(&-Scalar::one(), rhs)
    }
}

impl Mul for &NcPolynomial {
    type Output = NcPolynomial;
    fn mul(self, rhs: &NcPolynomial) -> NcPolynomial {
        self.mul_poly(rhs)
    }
}

impl Neg for &NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        self.scale(&-Scalar::one())
    }
}
