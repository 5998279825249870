use num_traits::One;

use crate::freealg::{NcPolynomial, Scalar, Term, Word};

/// Finds the first basis element (in basis order) whose leading word divides
/// `w`, and its leftmost occurrence.
fn find_divisor<'a>(w: &Word, basis: &'a [NcPolynomial]) -> Option<(&'a NcPolynomial, usize)> {
    basis.iter().find_map(|g| {
        let lm = g.lm().ok()?;
        w.find(lm).map(|pos| (g, pos))
    })
}

/// Fully reduces `f` by `basis`.
///
/// The largest reducible word is always rewritten first, at its leftmost
/// occurrence, by the first basis element whose leading word divides it.
/// Each step replaces a word by strictly smaller ones, so the loop terminates
/// under the well-ordering.
pub fn normal_form(f: &NcPolynomial, basis: &[NcPolynomial]) -> NcPolynomial {
    let order = f.order().clone();
    let mut rest = f.clone();
    let mut remainder: Vec<Term> = Vec::new();
    while let Ok(lead) = rest.lt() {
        match find_divisor(&lead.word, basis) {
            Some((g, pos)) => {
                let lm = g.lm().expect("divisor is nonzero");
                let left = lead.word.prefix(pos);
                let right = lead.word.subword(pos + lm.degree(), lead.word.degree());
                let c = &lead.coeff / g.lc().expect("divisor is nonzero");
                let step = g.sandwich(&c, &left, &right);
                rest = rest.add_scaled(&-Scalar::one(), &step);
            }
            None => {
                remainder.push(lead.clone());
                rest = rest.tail();
            }
        }
    }
    // the remainder was collected in strictly descending order
    NcPolynomial::from_terms(&order, remainder)
}

/// Keeps the leading term of `g` and reduces everything below it.
pub(crate) fn reduce_tail(g: &NcPolynomial, basis: &[NcPolynomial]) -> NcPolynomial {
    let Ok(lead) = g.lt() else { return g.clone() };
    let tail = normal_form(&g.tail(), basis);
    let head = NcPolynomial::monomial(g.order(), lead.coeff.clone(), lead.word.clone());
    &head + &tail
}
