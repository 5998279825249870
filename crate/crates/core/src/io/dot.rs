use std::fmt::Write;

use super::print::print_word;
use crate::freealg::GeneratorSet;
use crate::graphs::{ChainGraph, UfnarovskiGraph};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn render(name: &str, labels: &[String], mut edges: Vec<(usize, usize, Option<String>)>) -> String {
    edges.sort();
    let mut out = format!("digraph {name} {{\n");
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(l)).expect("writing to a String");
    }
    for (a, b, label) in edges {
        match label {
            Some(l) => writeln!(out, "  n{a} -> n{b} [label={}];", quote(&l)),
            None => writeln!(out, "  n{a} -> n{b};"),
        }
        .expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

/// Vertices in their graph order, edges sorted, each labelled by the letter
/// it appends.
pub fn emit_ufnarovski_dot(g: &UfnarovskiGraph, gens: &GeneratorSet) -> String {
    let labels: Vec<String> = g.vertices().iter().map(|v| print_word(v, gens)).collect();
    let edges = g
        .edges()
        .iter()
        .map(|e| (e.from, e.to, Some(gens.name(e.letter).to_owned())))
        .collect();
    render("ufnarovski", &labels, edges)
}

/// Vertex `n0` is `1`; edges carry no labels.
pub fn emit_chain_dot(cg: &ChainGraph, gens: &GeneratorSet) -> String {
    let labels: Vec<String> = cg.vertices().iter().map(|v| print_word(v, gens)).collect();
    let edges = cg.edges().iter().map(|&(a, b)| (a, b, None)).collect();
    render("chains", &labels, edges)
}
