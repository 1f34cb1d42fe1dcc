use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use srgclique::clique_poly::hat_inequality;
use srgclique::oracle::{self, Graph, OracleError, CLIQUE_LIMIT};
use srgclique::params::{ParamsError, SrgParams};
use srgclique::sieve::{family_scan, sieve_run, FamilyError, SieveError};
use srgclique::Overflow;
use thiserror::Error;

use crate::emit;
use crate::report::check_report;

#[derive(Debug, Parser)]
#[command(name = "srgclique", version, about = "Clique-based nonexistence sieve for strongly regular graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    #[value(alias = "markdown")]
    Md,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate feasible parameters with smallest eigenvalue -m and list those ruled out.
    Sieve {
        #[arg(long)]
        m: i128,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also list feasible tuples the sieve leaves open.
        #[arg(long)]
        include_open: bool,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print a JSON report for one parameter tuple.
    Check {
        v: i128,
        k: i128,
        lambda: i128,
        mu: i128,
    },
    /// Build and judge the parametric family for m_lo..=m_hi.
    Family {
        m_lo: i128,
        m_hi: i128,
        #[arg(long)]
        json: bool,
    },
    /// Build a small graph and compare the bounds with brute force.
    Oracle {
        /// e.g. petersen, triangular:8, lattice:6, paley:9, hat:13,154, complement:paley:13
        descriptor: String,
        /// Run every lemma check.
        #[arg(long)]
        verify: bool,
        /// Smallest eigenvalue is -m (detected when omitted).
        #[arg(long)]
        m: Option<i128>,
        /// Write the adjacency list to this file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid parameters: {0}")]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Sieve(#[from] SieveError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Overflow(_)
            | CliError::Params(ParamsError::Overflow(_))
            | CliError::Sieve(SieveError::Overflow(_))
            | CliError::Family(FamilyError::Overflow { .. }) => 3,
            _ => 2,
        }
    }
}

/// Largest `m` accepted by `family`.
pub const FAMILY_MAX_M: i128 = 1000;

/// Parses `args` and runs the command, writing to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<u8, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            write!(out, "{e}")?;
            return Ok(0);
        }
        Err(e) => return Err(CliError::Usage(e.to_string())),
    };
    match cli.command {
        Command::Sieve {
            m,
            format,
            out: path,
            include_open,
            jobs,
        } => {
            if m < 2 {
                return Err(CliError::Usage(format!("--m must be at least 2 (got {m})")));
            }
            let rows = sieve_run(m, include_open, jobs)?;
            let text = match format {
                Format::Csv => emit::csv(&rows),
                Format::Md => emit::markdown(&rows, include_open),
                Format::Json => emit::json(&rows),
            };
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Check { v, k, lambda, mu } => {
            let params = SrgParams::new(v, k, lambda, mu)?;
            let report = check_report(params)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serialises"))?;
            Ok(0)
        }
        Command::Family { m_lo, m_hi, json } => {
            if m_hi > FAMILY_MAX_M {
                return Err(CliError::Usage(format!("m_hi must be at most {FAMILY_MAX_M}")));
            }
            let rows = family_scan(m_lo, m_hi)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialise"))?;
            } else {
                writeln!(out, "m\tv\tk\tlambda\tmu\tfeasible\tcbar\tguaranteed\tforbidden\tdelsarte\tverdict")?;
                for r in &rows {
                    let ev = r.verdict.evidence;
                    let range = ev
                        .and_then(|e| e.forbidden_range)
                        .map(|f| format!("[{}, {}]", f.lo, f.hi))
                        .unwrap_or_else(|| "-".into());
                    let field = |x: Option<i128>| x.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        r.m,
                        r.params.v,
                        r.params.k,
                        r.params.lambda,
                        r.params.mu,
                        r.feasibility.feasible,
                        field(ev.map(|e| e.cbar)),
                        field(ev.map(|e| e.guaranteed_order)),
                        range,
                        field(ev.map(|e| e.delsarte_bound)),
                        r.verdict.status.as_str(),
                    )?;
                }
            }
            Ok(if rows.iter().all(|r| r.confirmed()) { 0 } else { 1 })
        }
        Command::Oracle {
            descriptor,
            verify,
            m,
            export,
        } => {
            let g = oracle::build(&descriptor)?;
            if let Some(path) = export {
                std::fs::write(path, g.adjacency_list())?;
            }
            run_oracle(&g, &descriptor, verify, m, out)
        }
    }
}

fn run_oracle(
    g: &Graph,
    descriptor: &str,
    verify: bool,
    m: Option<i128>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    writeln!(out, "graph: {} ({} vertices, {} edges)", g.label(), g.n(), g.edge_count())?;
    match oracle::verify_amply_regular(g) {
        Ok(p) => writeln!(
            out,
            "parameters: ({}, {}, {}, {}){}",
            p.v,
            p.k,
            p.lambda,
            p.mu,
            if p.diameter_two { "" } else { ", diameter > 2" }
        )?,
        Err(e) => writeln!(out, "parameters: not amply regular ({e})")?,
    }
    let eig = oracle::extreme_eigenvalues(g)?;
    writeln!(out, "largest eigenvalue: {}", eig.largest)?;
    writeln!(out, "smallest eigenvalue: {}", eig.smallest)?;
    if g.n() <= CLIQUE_LIMIT {
        writeln!(out, "maximum clique: {}", oracle::maximum_clique(g)?.len())?;
        writeln!(out, "maximum coclique: {}", oracle::maximum_coclique(g)?.len())?;
    } else {
        writeln!(out, "maximum clique: skipped (more than {CLIQUE_LIMIT} vertices)")?;
    }
    if let Some(arg) = descriptor.trim().strip_prefix("hat:") {
        let (a, t) = arg.split_once(',').expect("validated by build");
        let (a, t): (i128, i128) = (a.trim().parse().expect("validated"), t.trim().parse().expect("validated"));
        for m in 2..=8 {
            writeln!(out, "hat_inequality({a}, {t}, m = {m}): {}", hat_inequality(a, t, m))?;
        }
    }
    if !verify {
        return Ok(0);
    }
    let m = match m {
        Some(m) => m,
        None => {
            let guess = -eig.smallest.mid().round();
            if !eig.smallest.contains(-guess) {
                return Err(CliError::Usage(
                    "smallest eigenvalue is not an integer; pass --m".into(),
                ));
            }
            guess as i128
        }
    };
    let report = oracle::verify_lemmas(g, m)?;
    writeln!(out, "lemma checks (m = {m}):")?;
    for c in &report.checks {
        let status = if c.passed() { "pass" } else { "FAIL" };
        writeln!(out, "  {}: {status} ({} instances)", c.name, c.instances)?;
        for ce in &c.counterexamples {
            writeln!(out, "    counterexample: {ce}")?;
        }
    }
    writeln!(
        out,
        "all lemma checks: {}",
        if report.all_passed() { "pass" } else { "FAIL" }
    )?;
    Ok(if report.all_passed() { 0 } else { 1 })
}
