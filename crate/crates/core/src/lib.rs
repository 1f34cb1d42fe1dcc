//! Exact clique bounds and a nonexistence sieve for strongly regular graph
//! parameters with a fixed smallest eigenvalue.
//!
//! The exact pipeline ([`params`], [`bounds`], [`clique_poly`], [`sieve`])
//! uses integer arithmetic only. [`oracle`] builds small concrete graphs and
//! checks the bounds against brute force; it is the one place floats appear.

pub mod arith;
pub mod bounds;
pub mod clique_poly;
pub mod oracle;
pub mod params;
pub mod sieve;

pub use arith::{Overflow, Wide};
pub use params::{feasibility, spectrum, FeasibilityReport, ParamsError, Spectrum, SrgParams};
pub use sieve::{verdict, Verdict, VerdictStatus};
