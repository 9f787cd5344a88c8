//! Desk-scale toolkit for complexity-weighted coding theory and
//! renormalization of flowchart Hopf algebras.
//!
//! The crate is split by subject:
//!
//! * [`codes`]: code parameters, bound curves, Reed–Solomon codes, code
//!   ensembles and the complexity-weighted partition sum.
//! * [`complexity`]: a pinned, computable proxy for exponential Kolmogorov
//!   complexity, Kolmogorov order, Levin weights and Zipf analysis.
//! * [`graphs`]: flag/involution graphs, orientations, cuts, canonical forms
//!   and automorphism counts.
//! * [`feynman`]: the finite-dimensional toy action, graph weights, the
//!   graph expansion and an independent Wick-pairing oracle.
//! * [`hopf`]: the Connes–Kreimer bialgebra of oriented graphs with its cut
//!   coproduct and antipode.
//! * [`renorm`]: minimal-subtraction algebras, the convolution group and the
//!   Birkhoff (BPHZ) decomposition.
//! * [`halting`]: the halting-problem permutation lift, Kolmogorov-order
//!   conjugation, the series `Φ(k, σ; z)` and orbit classification.
//!
//! All exact quantities use [`num_rational::BigRational`]; floating point only
//! appears in the entropy curves, the partition sum and the Zipf fit.

pub mod codes;
pub mod complexity;
pub mod feynman;
pub mod graphs;
pub mod halting;
pub mod hopf;
pub mod rational;
pub mod renorm;

/// Version stamp written into every output file and complexity value.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
