use std::fmt::Write;

use num_traits::{One, Signed};

use crate::freealg::{GeneratorSet, NcPolynomial, Word};
use crate::groebner::{GroebnerResult, Presentation, Status};

/// `X*Y*X`, or `1` for the empty word.
pub fn print_word(w: &Word, gens: &GeneratorSet) -> String {
    if w.is_one() {
        return "1".to_owned();
    }
    let names: Vec<&str> = w.letters().iter().map(|&x| gens.name(x)).collect();
    names.join("*")
}

/// Terms in descending order, signs folded into the separators, unit
/// coefficients dropped: `Y*X - X*Y - 1`.
pub fn print_poly(p: &NcPolynomial) -> String {
    let gens = p.order().generators();
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (k, t) in p.terms().iter().enumerate() {
        let mag = t.coeff.abs();
        match (k, t.coeff.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if t.word.is_one() {
            write!(out, "{mag}").expect("writing to a String");
        } else {
            if !mag.is_one() {
                write!(out, "{mag}*").expect("writing to a String");
            }
            out.push_str(&print_word(&t.word, gens));
        }
    }
    out
}

/// One polynomial per line.
pub fn print_basis(basis: &[NcPolynomial]) -> String {
    let mut out = String::new();
    for g in basis {
        out.push_str(&print_poly(g));
        out.push('\n');
    }
    out
}

pub fn print_status(status: Status) -> String {
    match status {
        Status::Complete => "complete".to_owned(),
        Status::CompleteUpTo(d) => format!("complete up to degree {d}"),
    }
}

/// The basis followed by a `status:` line.
pub fn print_groebner(g: &GroebnerResult) -> String {
    let mut out = print_basis(&g.basis);
    writeln!(out, "status: {}", print_status(g.status)).expect("writing to a String");
    out
}

/// A presentation file that parses back to `p`.
pub fn print_presentation(p: &Presentation) -> String {
    let gens = p.generators();
    let names: Vec<&str> = gens.precedence().iter().map(|&x| gens.name(x)).collect();
    let mut out = format!("generators: {}\norder: deglex\n", names.join(" < "));
    out.push_str(&print_basis(p.relations()));
    out
}
