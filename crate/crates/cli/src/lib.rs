//! Command-line front end: sieve tables, single-tuple reports, the parametric
//! family scan and the graph oracle.

pub mod app;
pub mod emit;
pub mod report;

pub use app::{run, Cli, CliError, Command, Format};
pub use report::{check_report, CheckReport};
