//! Words, graded monomial orderings and exact noncommutative polynomials
//! over the free algebra `ℚ⟨X₁,…,Xₙ⟩`.

mod order;
mod poly;
mod word;

use thiserror::Error;

pub use order::{GeneratorSet, MonomialOrder, OrderKind};
pub use poly::{NcPolynomial, Scalar, Term};
pub use word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("leading data of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("a generator set needs at least one generator")]
    NoGenerators,
    #[error("generator names must be nonempty")]
    EmptyGeneratorName,
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("precedence is not a permutation of the generator indices")]
    InvalidPrecedence,
}
