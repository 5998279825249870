use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gradelift::graphs::{global_dim_bound, n_chains, ChainGraph, GlDimBound, UfnarovskiGraph};
use gradelift::groebner::{complete, lm_obstructions, GroebnerError, GroebnerResult, Presentation};
use gradelift::io::{
    emit_chain_dot, emit_report_json, emit_ufnarovski_dot, parse_polynomial, parse_presentation, print_groebner,
    print_poly, print_status, print_word, render_report, BasisDoc, StatusDoc,
};
use gradelift::monoideal::{hilbert_function, hilbert_series};
use gradelift::transfer::analyze;

#[derive(Debug, Parser)]
#[command(
    name = "gradelift",
    version,
    about = "Groebner bases and structural analysis of finitely presented algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Presentation file.
    input: PathBuf,
    /// Overlaps longer than this are left unresolved.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    degree_bound: u64,
    /// Largest degree for Hilbert counts and listings.
    #[arg(long, default_value_t = 12)]
    depth: usize,
    /// Write JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write output to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduced Groebner basis and its status.
    Gb(Common),
    /// Normal form of a polynomial modulo the relations.
    Nf {
        #[command(flatten)]
        common: Common,
        /// Polynomial in the presentation's generators.
        #[arg(long)]
        poly: String,
    },
    /// Property tables for the monomial, head-term and quotient algebras.
    Analyze(Common),
    /// Hilbert function up to --depth and the Hilbert series.
    Hilbert(Common),
    /// The Ufnarovski graph, or the chain graph with --chain.
    Graph {
        #[command(flatten)]
        common: Common,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
        /// Use the chain graph.
        #[arg(long)]
        chain: bool,
    },
    /// n-chains up to the first empty level or --depth, and the global dimension bound.
    Chains(Common),
    /// Full JSON report.
    Report(Common),
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Compute(String),
    Output(String),
}

impl Failure {
    fn report(&self) -> ExitCode {
        let (tag, msg, code) = match self {
            Failure::Usage(m) => ("usage", m, 1),
            Failure::Input(m) => ("input", m, 1),
            Failure::Compute(m) => ("compute", m, 2),
            Failure::Output(m) => ("output", m, 2),
        };
        eprintln!("error[{tag}]: {msg}");
        ExitCode::from(code)
    }
}

impl From<GroebnerError> for Failure {
    fn from(e: GroebnerError) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn load(common: &Common) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(&common.input)
        .map_err(|e| Failure::Input(format!("{}: {e}", common.input.display())))?;
    parse_presentation(&text).map_err(|e| Failure::Input(format!("{}:{e}", common.input.display())))
}

fn bound(common: &Common) -> usize {
    usize::try_from(common.degree_bound).unwrap_or(usize::MAX)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output documents always serialize");
    s.push('\n');
    s
}

fn basis_json(g: &GroebnerResult) -> serde_json::Value {
    let doc = BasisDoc {
        status: match g.status {
            gradelift::groebner::Status::Complete => StatusDoc::Complete,
            gradelift::groebner::Status::CompleteUpTo(d) => StatusDoc::CompleteUpTo(d),
        },
        degree_bound: g.degree_bound,
        basis: g.basis.iter().map(print_poly).collect(),
    };
    serde_json::to_value(doc).expect("basis documents always serialize")
}

fn invocation() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    format!("gradelift {}", args.join(" "))
}

fn run(command: &Command) -> Result<(String, &Common), Failure> {
    match command {
        Command::Gb(c) => {
            let g = complete(&load(c)?, bound(c))?;
            let out = if c.json {
                json(&basis_json(&g))
            } else {
                print_groebner(&g)
            };
            Ok((out, c))
        }
        Command::Nf { common: c, poly } => {
            let p = load(c)?;
            let f = parse_polynomial(poly, p.order()).map_err(|e| Failure::Usage(format!("--poly: {e}")))?;
            let g = complete(&p, bound(c))?;
            let nf = print_poly(&g.normal_form(&f));
            let out = if c.json {
                json(&serde_json::json!({ "normal_form": nf, "groebner": basis_json(&g) }))
            } else {
                format!("{nf}\nstatus: {}\n", print_status(g.status))
            };
            Ok((out, c))
        }
        Command::Analyze(c) | Command::Report(c) => {
            let r = analyze(&load(c)?, bound(c), c.depth)?;
            let as_json = c.json || matches!(command, Command::Report(_));
            let out = if as_json {
                emit_report_json(&r, Some(invocation()))
            } else {
                render_report(&r)
            };
            Ok((out, c))
        }
        Command::Hilbert(c) => {
            let g = complete(&load(c)?, bound(c))?;
            let omega = lm_obstructions(&g);
            let h = hilbert_function(&omega, c.depth);
            let s = hilbert_series(&omega);
            let counts: Vec<String> = h.counts.iter().map(ToString::to_string).collect();
            let out = if c.json {
                json(&serde_json::json!({
                    "hilbert": counts,
                    "series": s.to_string(),
                    "status": print_status(g.status),
                }))
            } else {
                format!(
                    "{}\nseries: {s}\nstatus: {}\n",
                    counts.join(" "),
                    print_status(g.status)
                )
            };
            Ok((out, c))
        }
        Command::Graph { common: c, dot, chain } => {
            let p = load(c)?;
            let g = complete(&p, bound(c))?;
            let omega = lm_obstructions(&g);
            let gens = p.generators();
            let out = match (chain, dot) {
                (true, true) => emit_chain_dot(&ChainGraph::build(&omega), gens),
                (false, true) => emit_ufnarovski_dot(&UfnarovskiGraph::build(&omega), gens),
                (true, false) => {
                    let cg = ChainGraph::build(&omega);
                    let mut s = String::new();
                    for &(a, b) in cg.edges() {
                        let (u, v) = (&cg.vertices()[a], &cg.vertices()[b]);
                        writeln!(s, "{} -> {}", print_word(u, gens), print_word(v, gens)).expect("String write");
                    }
                    s
                }
                (false, false) => {
                    let ug = UfnarovskiGraph::build(&omega);
                    let mut s = String::new();
                    let names: Vec<String> = ug.vertices().iter().map(|v| print_word(v, gens)).collect();
                    writeln!(s, "vertices: {}", names.join(", ")).expect("String write");
                    for e in ug.edges() {
                        writeln!(s, "{} -> {} [{}]", names[e.from], names[e.to], gens.name(e.letter))
                            .expect("String write");
                    }
                    s
                }
            };
            Ok((out, c))
        }
        Command::Chains(c) => {
            let p = load(c)?;
            let g = complete(&p, bound(c))?;
            let omega = lm_obstructions(&g);
            let cg = ChainGraph::build(&omega);
            let gens = p.generators();
            let mut levels = Vec::new();
            for n in -1..=c.depth as i64 {
                let chains = n_chains(&cg, n, p.order()).chains;
                let words: Vec<String> = chains.iter().map(|w| print_word(w, gens)).collect();
                let empty = words.is_empty();
                levels.push((n, words));
                if empty {
                    break;
                }
            }
            let dim = global_dim_bound(&cg);
            let out = if c.json {
                let levels: Vec<_> = levels
                    .iter()
                    .map(|(n, w)| serde_json::json!({ "n": n, "chains": w }))
                    .collect();
                json(&serde_json::json!({ "levels": levels, "gldim_bound": dim }))
            } else {
                let mut s = String::new();
                for (n, words) in &levels {
                    writeln!(s, "C_{n} = {{{}}}", words.join(", ")).expect("String write");
                }
                match dim {
                    GlDimBound::Finite(d) => writeln!(s, "gl.dim ≤ {d}"),
                    GlDimBound::Unbounded => writeln!(s, "gl.dim: no bound (chains of every length)"),
                }
                .expect("String write");
                s
            };
            Ok((out, c))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            return Failure::Usage(first.trim_start_matches("error: ").to_owned()).report();
        }
    };
    match run(&cli.command) {
        Ok((out, common)) => match &common.out {
            Some(path) => match std::fs::write(path, out) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => Failure::Output(format!("{}: {e}", path.display())).report(),
            },
            None => {
                print!("{out}");
                ExitCode::SUCCESS
            }
        },
        Err(f) => f.report(),
    }
}
