//! Presentation files, canonical text output, DOT export of the graphs and
//! the JSON report format.

mod dot;
mod parse;
mod print;
mod report;
mod text;

use thiserror::Error;

pub use dot::{emit_chain_dot, emit_ufnarovski_dot};
pub use parse::{parse_polynomial, parse_presentation};
pub use print::{print_basis, print_groebner, print_poly, print_presentation, print_status, print_word};
pub use report::{
    emit_report_json, parse_report_json, BasisDoc, NoetherianDoc, PresentationDoc, ReportDocument, SeriesDoc,
    StatusDoc, TableDoc, TargetsDoc, SCHEMA_VERSION,
};
pub use text::render_report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: unknown generator `{name}`")]
    UnknownGenerator { name: String, line: usize, column: usize },
    #[error("{line}: duplicate generator `{name}`")]
    DuplicateGenerator { name: String, line: usize },
    #[error("missing `generators:` line")]
    MissingGenerators,
}
