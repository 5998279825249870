use serde::{Deserialize, Serialize};

use super::print::{print_poly, print_word};
use crate::freealg::GeneratorSet;
use crate::graphs::{GlDimBound, GraphConvention, GrowthClass};
use crate::groebner::{GroebnerResult, Status};
use crate::monoideal::{QuotientDimension, RationalSeries};
use crate::transfer::{GkDimension, LiftReport, LiftTarget, PropertyTable, Quantity, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

/// Serialized form of a [`LiftReport`]. Words and polynomials are printed,
/// and integers that may exceed 64 bits are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    /// Command line that produced the report, when run from the CLI.
    pub invocation: Option<String>,
    pub presentation: PresentationDoc,
    pub degree_bound: usize,
    pub hilbert_depth: usize,
    pub graded: bool,
    pub groebner: BasisDoc,
    pub head_term_groebner: BasisDoc,
    pub obstructions: Vec<String>,
    pub graph_convention: GraphConvention,
    pub targets: TargetsDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    /// Ascending precedence.
    pub generators: Vec<String>,
    pub order: String,
    pub relations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    pub status: StatusDoc,
    pub degree_bound: usize,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "degree", rename_all = "snake_case")]
pub enum StatusDoc {
    Complete,
    CompleteUpTo(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetsDoc {
    pub monomial_algebra: TableDoc,
    pub head_term_algebra: TableDoc,
    pub quotient_algebra: TableDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoetherianDoc {
    pub left: Verdict,
    pub right: Verdict,
    pub weak: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub target: LiftTarget,
    pub finite_dim: Verdict,
    /// Decimal string, or `"infinite"`.
    pub dimension: Quantity<String>,
    pub hilbert: Quantity<Vec<String>>,
    pub hilbert_series: Quantity<SeriesDoc>,
    pub growth: Quantity<GrowthClass>,
    pub gk_dimension: Quantity<GkDimension>,
    pub noetherian: NoetherianDoc,
    pub semiprime: Verdict,
    pub prime: Verdict,
    pub domain: Verdict,
    pub artinian: Verdict,
    pub semisimple: Verdict,
    pub simple: Verdict,
    pub gldim_bound: Quantity<GlDimBound>,
    pub pbw: Verdict,
    pub kbasis_sample: Vec<Vec<String>>,
}

fn map_q<T, U>(q: &Quantity<T>, f: impl FnOnce(&T) -> U) -> Quantity<U> {
    Quantity {
        value: q.value.as_ref().map(f),
        certainty: q.certainty,
        theorem: q.theorem.clone(),
    }
}

fn basis_doc(g: &GroebnerResult) -> BasisDoc {
    BasisDoc {
        status: match g.status {
            Status::Complete => StatusDoc::Complete,
            Status::CompleteUpTo(d) => StatusDoc::CompleteUpTo(d),
        },
        degree_bound: g.degree_bound,
        basis: g.basis.iter().map(print_poly).collect(),
    }
}

fn series_doc(s: &RationalSeries) -> SeriesDoc {
    SeriesDoc {
        numerator: s.numerator.iter().map(ToString::to_string).collect(),
        denominator: s.denominator.iter().map(ToString::to_string).collect(),
        text: s.to_string(),
    }
}

fn table_doc(t: &PropertyTable, gens: &GeneratorSet) -> TableDoc {
    TableDoc {
        target: t.target,
        finite_dim: t.finite_dim.clone(),
        dimension: map_q(&t.dimension, |d| match d {
            QuotientDimension::Finite(n) => n.to_string(),
            QuotientDimension::Infinite => "infinite".to_owned(),
        }),
        hilbert: map_q(&t.hilbert, |h| h.counts.iter().map(ToString::to_string).collect()),
        hilbert_series: map_q(&t.hilbert_series, series_doc),
        growth: t.growth.clone(),
        gk_dimension: t.gk_dimension.clone(),
        noetherian: NoetherianDoc {
            left: t.noetherian_left.clone(),
            right: t.noetherian_right.clone(),
            weak: t.noetherian_weak.clone(),
        },
        semiprime: t.semiprime.clone(),
        prime: t.prime.clone(),
        domain: t.domain.clone(),
        artinian: t.artinian.clone(),
        semisimple: t.semisimple.clone(),
        simple: t.simple.clone(),
        gldim_bound: t.gldim_bound.clone(),
        pbw: t.pbw.clone(),
        kbasis_sample: t
            .kbasis_sample
            .iter()
            .map(|level| level.iter().map(|w| print_word(w, gens)).collect())
            .collect(),
    }
}

impl ReportDocument {
    pub fn from_report(r: &LiftReport, invocation: Option<String>) -> Self {
        let gens = r.presentation.generators();
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            invocation,
            presentation: PresentationDoc {
                generators: gens.precedence().iter().map(|&x| gens.name(x).to_owned()).collect(),
                order: "deglex".to_owned(),
                relations: r.presentation.relations().iter().map(print_poly).collect(),
            },
            degree_bound: r.degree_bound,
            hilbert_depth: r.hilbert_depth,
            graded: r.graded,
            groebner: basis_doc(&r.gb),
            head_term_groebner: basis_doc(&r.head_term_gb),
            obstructions: r.obstructions.words().iter().map(|w| print_word(w, gens)).collect(),
            graph_convention: r.graph_convention,
            targets: TargetsDoc {
                monomial_algebra: table_doc(&r.monomial, gens),
                head_term_algebra: table_doc(&r.head_term, gens),
                quotient_algebra: table_doc(&r.quotient, gens),
            },
        }
    }
}

/// Pretty-printed JSON with keys in declaration order, newline-terminated.
pub fn emit_report_json(r: &LiftReport, invocation: Option<String>) -> String {
    let doc = ReportDocument::from_report(r, invocation);
    let mut s = serde_json::to_string_pretty(&doc).expect("report documents always serialize");
    s.push('\n');
    s
}

pub fn parse_report_json(text: &str) -> Result<ReportDocument, serde_json::Error> {
    serde_json::from_str(text)
}
