//! Parameterized approximation for vertex-deletion problems.
//!
//! The library turns a problem-specific *sampling step* (a randomized
//! polynomial-time rule that returns a vertex whose removal drops the
//! optimum with probability at least q) plus any *black-box*
//! parameterized α-approximation into a β-approximation for every
//! β between 1 and 1/q, and computes the exponent base of the
//! resulting running time.
//!
//! Modules:
//! - [`hypergraph`]: graphs/hypergraphs, pattern containment, text
//!   I/O, seeded generators.
//! - [`problems`]: the registry of vertex-deletion problems with
//!   deciders and published solver constants.
//! - [`sampling`]: the sampling steps and the deterministic RNG.
//! - [`procedure`]: iterated sampling with a `⌊δ·t⌋` budget.
//! - [`framework`]: the sample-then-extend drivers and default
//!   solvers.
//! - [`calculator`]: KL divergence, δ* roots, and the piecewise
//!   exponent-base formula with table generation.
//! - [`oracle`]: brute-force optima and Monte-Carlo harnesses.
//! - [`cli`]: the command-line front end.

pub mod calculator;
pub mod cli;
pub mod error;
pub mod framework;
pub mod hypergraph;
pub mod oracle;
pub mod problems;
pub mod procedure;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result};
