//! Property tables for the monomial algebra `R/⟨LM(G)⟩`, the head-term
//! algebra `R/⟨HT(G)⟩` and the quotient `R/I`, with each verdict tagged by
//! the result it rests on and how far it can be trusted.
//!
//! Properties of the two graded algebras are decided directly. Verdicts on
//! `R/I` come from two kinds of rule: equalities carried by the shared
//! normal-word basis (dimension, Hilbert data, growth, basis shape), which
//! transfer both ways, and lifts from the associated graded algebra
//! (Noetherian, (semi)prime, domain, global dimension), which only transfer a
//! positive answer. A negative answer on the graded side becomes `Unknown`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::freealg::{NcPolynomial, Word};
use crate::graphs::{
    classify_growth, global_dim_bound, noetherian_test, prime_test, semiprime_test, ChainGraph, GlDimBound,
    GraphConvention, GrowthClass, UfnarovskiGraph,
};
use crate::groebner::{
    complete, ht_generators, lm_obstructions, pbw_shape, GroebnerError, GroebnerResult, Presentation, Status,
};
use crate::monoideal::{
    bridge_exists, hilbert_function, hilbert_series, normal_words, quotient_dimension, HilbertData, ObstructionSet,
    QuotientDimension, RationalSeries,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "degree", rename_all = "snake_case")]
pub enum Certainty {
    /// Rests on a complete Gröbner basis, or on monomial data alone.
    Certified,
    /// Rests on a basis completed only up to the carried degree.
    BoundedEvidence(usize),
}

impl Certainty {
    fn of(status: Status) -> Self {
        match status {
            Status::Complete => Certainty::Certified,
            Status::CompleteUpTo(d) => Certainty::BoundedEvidence(d),
        }
    }

    /// The weaker of the two grades.
    fn min(self, other: Certainty) -> Certainty {
        match (self, other) {
            (Certainty::Certified, c) | (c, Certainty::Certified) => c,
            (Certainty::BoundedEvidence(a), Certainty::BoundedEvidence(b)) => Certainty::BoundedEvidence(a.min(b)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: Answer,
    pub certainty: Certainty,
    pub theorem: String,
}

impl Verdict {
    fn new(value: Answer, certainty: Certainty, theorem: &str) -> Self {
        Verdict {
            value,
            certainty,
            theorem: theorem.to_owned(),
        }
    }

    fn from_bool(b: bool, certainty: Certainty, theorem: &str) -> Self {
        Verdict::new(if b { Answer::Yes } else { Answer::No }, certainty, theorem)
    }
}

/// A computed value with the same provenance tags as a [`Verdict`]; `None`
/// means the value could not be determined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantity<T> {
    pub value: Option<T>,
    pub certainty: Certainty,
    pub theorem: String,
}

impl<T> Quantity<T> {
    fn known(value: T, certainty: Certainty, theorem: &str) -> Self {
        Quantity {
            value: Some(value),
            certainty,
            theorem: theorem.to_owned(),
        }
    }

    fn unknown(certainty: Certainty, theorem: &str) -> Self {
        Quantity {
            value: None,
            certainty,
            theorem: theorem.to_owned(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftTarget {
    MonomialAlgebra,
    HeadTermAlgebra,
    QuotientAlgebra,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum GkDimension {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyTable {
    pub target: LiftTarget,
    pub finite_dim: Verdict,
    pub dimension: Quantity<QuotientDimension>,
    pub hilbert: Quantity<HilbertData>,
    pub hilbert_series: Quantity<RationalSeries>,
    pub growth: Quantity<GrowthClass>,
    pub gk_dimension: Quantity<GkDimension>,
    pub noetherian_left: Verdict,
    pub noetherian_right: Verdict,
    pub noetherian_weak: Verdict,
    pub semiprime: Verdict,
    pub prime: Verdict,
    pub domain: Verdict,
    pub artinian: Verdict,
    pub semisimple: Verdict,
    pub simple: Verdict,
    pub gldim_bound: Quantity<GlDimBound>,
    pub pbw: Verdict,
    /// Normal words by degree: a `K`-basis sample of the target.
    pub kbasis_sample: Vec<Vec<Word>>,
}

impl PropertyTable {
    /// All yes/no verdicts with their report keys.
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 11] {
        [
            ("finite_dim", &self.finite_dim),
            ("noetherian_left", &self.noetherian_left),
            ("noetherian_right", &self.noetherian_right),
            ("noetherian_weak", &self.noetherian_weak),
            ("semiprime", &self.semiprime),
            ("prime", &self.prime),
            ("domain", &self.domain),
            ("artinian", &self.artinian),
            ("semisimple", &self.semisimple),
            ("simple", &self.simple),
            ("pbw", &self.pbw),
        ]
    }

    /// Certainty grades of every entry, verdicts and quantities alike.
    pub fn certainties(&self) -> Vec<Certainty> {
        let mut out: Vec<Certainty> = self.verdicts().iter().map(|(_, v)| v.certainty).collect();
        out.extend([
            self.dimension.certainty,
            self.hilbert.certainty,
            self.hilbert_series.certainty,
            self.growth.certainty,
            self.gk_dimension.certainty,
            self.gldim_bound.certainty,
        ]);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub presentation: Presentation,
    pub degree_bound: usize,
    pub hilbert_depth: usize,
    pub gb: GroebnerResult,
    pub obstructions: ObstructionSet,
    /// Completion of the head terms of `gb`, presenting the associated
    /// graded algebra.
    pub head_term_gb: GroebnerResult,
    pub graded: bool,
    pub graph_convention: GraphConvention,
    pub monomial: PropertyTable,
    pub head_term: PropertyTable,
    pub quotient: PropertyTable,
}

impl LiftReport {
    pub fn tables(&self) -> [&PropertyTable; 3] {
        [&self.monomial, &self.head_term, &self.quotient]
    }
}

// Citation labels carried by the verdicts.
const DIRECT: &str = "direct computation on the obstruction set";
const BASIS_EQUALITY: &str = "shared normal-word basis of the algebra and its monomial algebra";
const SERIES_GRADED: &str = "Hilbert series equality for graded ideals";
const SERIES_NOT_GRADED: &str = "Hilbert series equality needs a graded ideal";
const GROWTH: &str = "Ufnarovski growth criterion";
const NOETHERIAN: &str = "Ufnarovski Noetherian criterion";
const NOETHERIAN_LIFT: &str = "Noetherian lift from the associated graded algebra";
const CYCLIC: &str = "cyclic-word criterion for (semi)primeness";
const NILPOTENT: &str = "ideals generated by normal words with zero product";
const PRIME_LIFT: &str = "(semi)prime lift from the associated graded algebra";
const DOMAIN: &str = "monomial algebra is a domain iff every obstruction is a letter";
const DOMAIN_LIFT: &str = "domain lift from the associated graded algebra";
const ZERO_RING: &str = "the zero algebra";
const ARTINIAN_GRADED: &str = "connected graded algebra is Artinian iff finite-dimensional";
const ARTINIAN_FINITE: &str = "finite-dimensional algebras are Artinian";
const ARTINIAN_LIFT: &str = "Artinian lift needs a finite-dimensional graded algebra";
const SEMISIMPLE_GRADED: &str = "connected graded algebra is semisimple iff of dimension at most 1";
const SEMISIMPLE_LIFT: &str = "semisimple lift needs a semisimple graded algebra";
const SIMPLE: &str = "no decision procedure for simplicity";
const CHAINS: &str = "chain-graph bound on global dimension";
const GLDIM_LIFT: &str = "global dimension bound lifts from the associated graded algebra";
const PBW: &str = "normal words are the ordered monomials";
const PBW_LIFT: &str = "ordered monomials form a basis of the algebra";

/// Words of degree `1..=max` kept as candidate witnesses; the searches below
/// give up (answer `Unknown`) past this many.
const WITNESS_LIMIT: usize = 300;

/// Normal words spanning degrees `0..=d` of the algebra presented by `g`.
pub fn kbasis_sample(g: &GroebnerResult, d: usize) -> Vec<Vec<Word>> {
    normal_words(&lm_obstructions(g), d)
}

/// True iff every relation is homogeneous, which makes `⟨relations⟩` graded.
pub fn graded_ideal_check(p: &Presentation) -> bool {
    p.relations().iter().all(NcPolynomial::is_homogeneous)
}

/// Completes `p` up to `degree_bound`, completes the head terms of the
/// result, and tabulates every property for the three algebras.
pub fn analyze(p: &Presentation, degree_bound: usize, hilbert_depth: usize) -> Result<LiftReport, GroebnerError> {
    let gb = complete(p, degree_bound)?;
    let omega = lm_obstructions(&gb);
    let ht_presentation =
        Presentation::new(p.order().clone(), ht_generators(&gb)).expect("head terms of a basis are nonzero");
    let head_term_gb = complete(&ht_presentation, degree_bound)?;
    let ht_omega = lm_obstructions(&head_term_gb);
    let graded = graded_ideal_check(p);
    let cert = Certainty::of(gb.status);
    let ht_cert = cert.min(Certainty::of(head_term_gb.status));

    let monomial = graded_table(LiftTarget::MonomialAlgebra, &omega, &gb, cert, hilbert_depth);
    let ht_facts = graded_table(
        LiftTarget::HeadTermAlgebra,
        &ht_omega,
        &head_term_gb,
        ht_cert,
        hilbert_depth,
    );
    let (head_term, quotient) = if p.relations().iter().all(NcPolynomial::is_monomial) {
        // a monomial ideal is its own leading-word ideal: all three algebras coincide
        (
            identical(LiftTarget::HeadTermAlgebra, &monomial),
            identical(LiftTarget::QuotientAlgebra, &monomial),
        )
    } else {
        let mut head_term = lift(LiftTarget::HeadTermAlgebra, &ht_facts, ht_cert, true);
        // the head-term algebra is itself connected graded
        head_term.artinian = equal(&ht_facts.artinian, ht_cert, ARTINIAN_GRADED);
        head_term.semisimple = equal(&ht_facts.semisimple, ht_cert, SEMISIMPLE_GRADED);
        (head_term, lift(LiftTarget::QuotientAlgebra, &monomial, cert, graded))
    };
    let graph_convention = UfnarovskiGraph::build(&omega).convention();

    Ok(LiftReport {
        presentation: p.clone(),
        degree_bound,
        hilbert_depth,
        gb,
        obstructions: omega,
        head_term_gb,
        graded,
        graph_convention,
        monomial,
        head_term,
        quotient,
    })
}

fn graded_table(
    target: LiftTarget,
    omega: &ObstructionSet,
    g: &GroebnerResult,
    cert: Certainty,
    depth: usize,
) -> PropertyTable {
    let graph = UfnarovskiGraph::build(omega);
    let dimension = quotient_dimension(omega);
    let finite = matches!(dimension, QuotientDimension::Finite(_));
    let at_most_one = matches!(&dimension, QuotientDimension::Finite(n) if *n <= BigUint::from(1u32));
    let growth = classify_growth(&graph);
    let gk = match growth.gk_dimension() {
        Some(d) => GkDimension::Finite(d),
        None => GkDimension::Infinite,
    };
    let noetherian = noetherian_test(&graph);
    let zero = omega.is_unit();
    let domain = if zero {
        Verdict::new(Answer::No, cert, ZERO_RING)
    } else {
        Verdict::from_bool(omega.words().iter().all(|w| w.degree() == 1), cert, DOMAIN)
    };
    let (semiprime, prime) = primeness(omega, cert);

    PropertyTable {
        target,
        finite_dim: Verdict::from_bool(finite, cert, DIRECT),
        dimension: Quantity::known(dimension, cert, DIRECT),
        hilbert: Quantity::known(hilbert_function(omega, depth), cert, DIRECT),
        hilbert_series: Quantity::known(hilbert_series(omega), cert, DIRECT),
        growth: Quantity::known(growth, cert, GROWTH),
        gk_dimension: Quantity::known(gk, cert, GROWTH),
        noetherian_left: Verdict::from_bool(noetherian.left, cert, NOETHERIAN),
        noetherian_right: Verdict::from_bool(noetherian.right, cert, NOETHERIAN),
        noetherian_weak: Verdict::from_bool(noetherian.weak, cert, NOETHERIAN),
        semiprime,
        prime,
        domain,
        artinian: Verdict::from_bool(finite, cert, ARTINIAN_GRADED),
        semisimple: Verdict::from_bool(at_most_one, cert, SEMISIMPLE_GRADED),
        simple: Verdict::new(Answer::Unknown, cert, SIMPLE),
        gldim_bound: Quantity::known(global_dim_bound(&ChainGraph::build(omega)), cert, CHAINS),
        pbw: Verdict::from_bool(pbw_shape(g), cert, PBW),
        kbasis_sample: normal_words(omega, depth),
    }
}

/// Semiprime and prime verdicts for `R/⟨Ω⟩`. The cyclic-word tests are
/// sufficient; a `No` needs an explicit pair of normal words `u, v` with
/// `u·w·v` reducible for every `w`.
fn primeness(omega: &ObstructionSet, cert: Certainty) -> (Verdict, Verdict) {
    if omega.is_unit() {
        return (
            Verdict::new(Answer::Yes, cert, ZERO_RING),
            Verdict::new(Answer::No, cert, ZERO_RING),
        );
    }
    let ell = omega.max_degree().max(1);
    let candidates: Vec<Word> = normal_words(omega, ell).into_iter().skip(1).flatten().collect();
    let searchable = candidates.len() <= WITNESS_LIMIT;

    let semiprime = if semiprime_test(omega) {
        Verdict::new(Answer::Yes, cert, CYCLIC)
    } else if searchable && candidates.iter().any(|v| !bridge_exists(omega, v, v)) {
        Verdict::new(Answer::No, cert, NILPOTENT)
    } else {
        Verdict::new(Answer::Unknown, cert, CYCLIC)
    };
    let prime = if prime_test(omega) {
        Verdict::new(Answer::Yes, cert, CYCLIC)
    } else if semiprime.value == Answer::No
        || (searchable
            && candidates
                .iter()
                .any(|u| candidates.iter().any(|v| !bridge_exists(omega, u, v))))
    {
        Verdict::new(Answer::No, cert, NILPOTENT)
    } else {
        Verdict::new(Answer::Unknown, cert, CYCLIC)
    };
    (semiprime, prime)
}

/// The table of an algebra that equals `base`'s algebra, every entry kept.
fn identical(target: LiftTarget, base: &PropertyTable) -> PropertyTable {
    PropertyTable { target, ..base.clone() }
}

/// One-way lift: `Yes` transfers, anything else becomes `Unknown`.
fn lift_yes(v: &Verdict, cert: Certainty, theorem: &str) -> Verdict {
    match v.value {
        Answer::Yes => Verdict::new(Answer::Yes, cert, theorem),
        _ => Verdict::new(Answer::Unknown, cert, theorem),
    }
}

/// Carries an equality-backed verdict over unchanged apart from its tags.
fn equal(v: &Verdict, cert: Certainty, theorem: &str) -> Verdict {
    Verdict::new(v.value, cert, theorem)
}

fn equal_q<T: Clone>(q: &Quantity<T>, cert: Certainty, theorem: &str) -> Quantity<T> {
    Quantity {
        value: q.value.clone(),
        certainty: cert,
        theorem: theorem.to_owned(),
    }
}

/// Builds the table of a filtered algebra from that of a graded algebra
/// sharing its normal words (its associated monomial or graded algebra).
fn lift(target: LiftTarget, base: &PropertyTable, cert: Certainty, graded: bool) -> PropertyTable {
    let dim = base.dimension.value.clone();
    let zero = matches!(&dim, Some(QuotientDimension::Finite(n)) if *n == BigUint::from(0u32));
    let finite = base.finite_dim.value == Answer::Yes;

    let domain = if zero {
        Verdict::new(Answer::No, cert, ZERO_RING)
    } else {
        lift_yes(&base.domain, cert, DOMAIN_LIFT)
    };
    let artinian = if finite {
        Verdict::new(Answer::Yes, cert, ARTINIAN_FINITE)
    } else {
        Verdict::new(Answer::Unknown, cert, ARTINIAN_LIFT)
    };
    let semisimple = if base.semisimple.value == Answer::Yes {
        Verdict::new(Answer::Yes, cert, SEMISIMPLE_LIFT)
    } else {
        Verdict::new(Answer::Unknown, cert, SEMISIMPLE_LIFT)
    };
    let hilbert_series = if graded {
        equal_q(&base.hilbert_series, cert, SERIES_GRADED)
    } else {
        Quantity::unknown(cert, SERIES_NOT_GRADED)
    };
    let gldim_bound = match base.gldim_bound.value {
        Some(GlDimBound::Finite(d)) => Quantity::known(GlDimBound::Finite(d), cert, GLDIM_LIFT),
        _ => Quantity::unknown(cert, GLDIM_LIFT),
    };

    PropertyTable {
        target,
        finite_dim: equal(&base.finite_dim, cert, BASIS_EQUALITY),
        dimension: equal_q(&base.dimension, cert, BASIS_EQUALITY),
        hilbert: equal_q(&base.hilbert, cert, BASIS_EQUALITY),
        hilbert_series,
        growth: equal_q(&base.growth, cert, BASIS_EQUALITY),
        gk_dimension: equal_q(&base.gk_dimension, cert, BASIS_EQUALITY),
        noetherian_left: lift_yes(&base.noetherian_left, cert, NOETHERIAN_LIFT),
        noetherian_right: lift_yes(&base.noetherian_right, cert, NOETHERIAN_LIFT),
        noetherian_weak: lift_yes(&base.noetherian_weak, cert, NOETHERIAN_LIFT),
        semiprime: lift_yes(&base.semiprime, cert, PRIME_LIFT),
        prime: lift_yes(&base.prime, cert, PRIME_LIFT),
        domain,
        artinian,
        semisimple,
        simple: Verdict::new(Answer::Unknown, cert, SIMPLE),
        gldim_bound,
        pbw: lift_yes(&base.pbw, cert, PBW_LIFT),
        kbasis_sample: base.kbasis_sample.clone(),
    }
}
