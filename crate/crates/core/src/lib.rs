//! Noncommutative Gröbner bases and the structure theory of the associated
//! monomial algebras.
//!
//! Given a presentation `A = ℚ⟨X₁,…,Xₙ⟩/I`, the crate completes a
//! (degree-truncated) reduced Gröbner basis `G` under deglex, forms the
//! monomial algebra `R/⟨LM(G)⟩` and the head-term algebra `R/⟨HT(G)⟩`, and
//! decides structural properties of the monomial algebra from its Ufnarovski
//! graph and chain graph. The [`transfer`] module lifts those verdicts to `A`.

pub mod freealg;
pub mod graphs;
pub mod groebner;
pub mod io;
pub mod monoideal;
pub mod transfer;
