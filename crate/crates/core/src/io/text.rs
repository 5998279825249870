use std::fmt::Write;

use super::print::{print_poly, print_status, print_word};
use crate::freealg::GeneratorSet;
use crate::graphs::{GlDimBound, GrowthClass};
use crate::monoideal::QuotientDimension;
use crate::transfer::{Answer, Certainty, GkDimension, LiftReport, LiftTarget, PropertyTable, Quantity};

fn certainty(c: Certainty) -> String {
    match c {
        Certainty::Certified => "certified".to_owned(),
        Certainty::BoundedEvidence(d) => format!("bounded evidence (degree {d})"),
    }
}

fn answer(a: Answer) -> &'static str {
    match a {
        Answer::Yes => "yes",
        Answer::No => "no",
        Answer::Unknown => "unknown",
    }
}

fn row(out: &mut String, key: &str, value: &str, c: Certainty, theorem: &str) {
    writeln!(out, "  {key:<17} {value:<24} [{}; {theorem}]", certainty(c)).expect("writing to a String");
}

fn quantity<T>(out: &mut String, key: &str, q: &Quantity<T>, show: impl FnOnce(&T) -> String) {
    let value = q.value.as_ref().map_or_else(|| "unknown".to_owned(), show);
    row(out, key, &value, q.certainty, &q.theorem);
}

fn target_name(t: LiftTarget) -> &'static str {
    match t {
        LiftTarget::MonomialAlgebra => "monomial algebra R/<LM(G)>",
        LiftTarget::HeadTermAlgebra => "head-term algebra R/<HT(G)>",
        LiftTarget::QuotientAlgebra => "quotient algebra R/I",
    }
}

fn table(out: &mut String, t: &PropertyTable, gens: &GeneratorSet) {
    writeln!(out, "\n[{}]", target_name(t.target)).expect("writing to a String");
    for (key, v) in t.verdicts().into_iter().take(1) {
        row(out, key, answer(v.value), v.certainty, &v.theorem);
    }
    quantity(out, "dimension", &t.dimension, |d| match d {
        QuotientDimension::Finite(n) => n.to_string(),
        QuotientDimension::Infinite => "infinite".to_owned(),
    });
    quantity(out, "hilbert", &t.hilbert, |h| {
        h.counts.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    });
    quantity(out, "hilbert_series", &t.hilbert_series, ToString::to_string);
    quantity(out, "growth", &t.growth, |g| match g {
        GrowthClass::FiniteDimensional => "finite-dimensional".to_owned(),
        GrowthClass::Polynomial(d) => format!("polynomial of degree {d}"),
        GrowthClass::Exponential => "exponential".to_owned(),
    });
    quantity(out, "gk_dimension", &t.gk_dimension, |g| match g {
        GkDimension::Finite(d) => d.to_string(),
        GkDimension::Infinite => "infinite".to_owned(),
    });
    for (key, v) in t.verdicts().into_iter().skip(1) {
        row(out, key, answer(v.value), v.certainty, &v.theorem);
    }
    quantity(out, "gldim_bound", &t.gldim_bound, |b| match b {
        GlDimBound::Finite(d) => format!("gl.dim <= {d}"),
        GlDimBound::Unbounded => "unbounded".to_owned(),
    });
    let sample: Vec<String> = t
        .kbasis_sample
        .iter()
        .take(4)
        .map(|level| level.iter().map(|w| print_word(w, gens)).collect::<Vec<_>>().join(", "))
        .collect();
    writeln!(out, "  {:<17} {}", "kbasis_sample", sample.join("; ")).expect("writing to a String");
}

/// Human-readable form of a report.
pub fn render_report(r: &LiftReport) -> String {
    let gens = r.presentation.generators();
    let names: Vec<&str> = gens.precedence().iter().map(|&x| gens.name(x)).collect();
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "generators: {}", names.join(" < ")).expect("writing to a String");
    writeln!(w, "relations:").expect("writing to a String");
    for rel in r.presentation.relations() {
        writeln!(w, "  {}", print_poly(rel)).expect("writing to a String");
    }
    writeln!(w, "graded ideal: {}", if r.graded { "yes" } else { "no" }).expect("writing to a String");
    writeln!(
        w,
        "groebner basis (status: {}, degree bound {}):",
        print_status(r.gb.status),
        r.degree_bound
    )
    .expect("writing to a String");
    for g in &r.gb.basis {
        writeln!(w, "  {}", print_poly(g)).expect("writing to a String");
    }
    writeln!(w, "head-term basis (status: {}):", print_status(r.head_term_gb.status)).expect("writing to a String");
    for g in &r.head_term_gb.basis {
        writeln!(w, "  {}", print_poly(g)).expect("writing to a String");
    }
    let obs: Vec<String> = r.obstructions.words().iter().map(|v| print_word(v, gens)).collect();
    writeln!(
        w,
        "obstructions: {}",
        if obs.is_empty() {
            "none".to_owned()
        } else {
            obs.join(", ")
        }
    )
    .expect("writing to a String");
    for t in r.tables() {
        table(&mut out, t, gens);
    }
    out
}
