//! Exhaustive checks of the clique and claw lemmas on a concrete graph.

use serde::{Deserialize, Serialize};

use super::{
    extreme_eigenvalues, hat_quotient_extremes, maximal_cliques, maximum_clique, maximum_coclique,
    verify_amply_regular, Graph, OracleError,
};
use crate::bounds::{claw_guarantee, claw_slack, clique_mu_necessary, delsarte_bound};
use crate::clique_poly::{a_bound, hat_inequality};
use crate::params::SrgParams;

/// Outcome of one lemma over every instance it applies to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub name: String,
    pub instances: usize,
    pub counterexamples: Vec<String>,
}

impl LemmaCheck {
    fn new(name: &str) -> Self {
        LemmaCheck {
            name: name.to_string(),
            instances: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.counterexamples.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub label: String,
    pub params: SrgParams,
    pub m: i128,
    pub max_clique: usize,
    pub max_coclique: usize,
    pub maximal_clique_orders: Vec<usize>,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(LemmaCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every check on `g`, which must be amply regular with smallest
/// eigenvalue `−m`.
///
/// * `delsarte`: maximum clique at most `1 + k/m`
/// * `hat_inequality`: each maximal clique `C` and outside vertex `y` with
///   `a` neighbours in `C` satisfy the inequality for `H(a, |C| − a)`
/// * `a_bound`: the same `a` never exceeds the a-bound when it applies
/// * `clique_mu`: the edge-count corollary for every maximal clique order
/// * `claw_bound`: local cocliques of every order `2..=s` obey the claw bound
/// * `guaranteed_clique`: a clique of the forced order exists
/// * `hat_interlacing`: each embedded `H(a,t)` has quotient eigenvalues `≥ −m`
pub fn verify_lemmas(g: &Graph, m: i128) -> Result<LemmaReport, OracleError> {
    let ar = verify_amply_regular(g).map_err(OracleError::NotAmplyRegular)?;
    let params = SrgParams {
        v: ar.v,
        k: ar.k,
        lambda: ar.lambda,
        mu: ar.mu,
    };
    let eig = extreme_eigenvalues(g)?;
    if !eig.smallest.contains(-m as f64) {
        return Err(OracleError::WrongSmallestEigenvalue {
            smallest: eig.smallest,
            m,
        });
    }
    let cliques = maximal_cliques(g)?;
    let max_clique = maximum_clique(g)?.len();
    let max_coclique = maximum_coclique(g)?.len();

    let mut delsarte = LemmaCheck::new("delsarte");
    let upper = delsarte_bound(params.k, m);
    delsarte.record(max_clique as i128 <= upper, || {
        format!("maximum clique {max_clique} > {upper}")
    });

    let mut hat = LemmaCheck::new("hat_inequality");
    let mut abound = LemmaCheck::new("a_bound");
    let mut interlacing = LemmaCheck::new("hat_interlacing");
    let mut hats = std::collections::BTreeSet::new();
    for clique in &cliques {
        let c = clique.len() as i128;
        let bound = a_bound(c, m, params.mu);
        for y in (0..g.n()).filter(|y| !clique.contains(y)) {
            let a = clique.iter().filter(|&&u| g.adjacent(u, y)).count() as i128;
            hat.record(hat_inequality(a, c - a, m), || {
                format!("vertex {y} has {a} neighbours in clique {clique:?}")
            });
            if let Some(b) = bound {
                abound.record(a <= b, || {
                    format!("vertex {y} has {a} > {b} neighbours in clique {clique:?}")
                });
            }
            if a > 0 {
                hats.insert((a, c - a));
            }
        }
    }
    for &(a, t) in &hats {
        let smallest = hat_quotient_extremes(a, t).smallest;
        interlacing.record(smallest.hi >= -m as f64, || {
            format!("H({a},{t}) quotient eigenvalue {} < -{m}", smallest.mid())
        });
    }

    let mut orders: Vec<usize> = cliques.iter().map(Vec::len).collect();
    orders.sort_unstable();
    orders.dedup();
    let mut clique_mu = LemmaCheck::new("clique_mu");
    for &c in &orders {
        let ok = c < 2 || clique_mu_necessary(&params, c as i128).unwrap_or(false);
        clique_mu.record(ok, || format!("maximal clique order {c}"));
    }

    let mut claw = LemmaCheck::new("claw_bound");
    for x in 0..g.n() {
        let local: Vec<usize> = g.neighbours(x).ones().collect();
        let s = maximum_coclique(&g.induced(&local))?.len() as i128;
        for cbar in 2..=s {
            let ok = claw_slack(&params, cbar).map(|d| d <= 0).unwrap_or(false);
            claw.record(ok, || format!("vertex {x} has a {cbar}-claw"));
        }
    }

    let mut guaranteed = LemmaCheck::new("guaranteed_clique");
    if let Ok(Some(gc)) = claw_guarantee(&params) {
        guaranteed.record(max_clique as i128 >= gc.guaranteed_order, || {
            format!(
                "no clique of order {} (c̄ = {}), maximum is {max_clique}",
                gc.guaranteed_order, gc.cbar
            )
        });
    }

    Ok(LemmaReport {
        label: g.label().to_string(),
        params,
        m,
        max_clique,
        max_coclique,
        maximal_clique_orders: orders,
        checks: vec![delsarte, hat, abound, clique_mu, claw, guaranteed, interlacing],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{hat, lattice, paley, petersen, triangular};

    #[test]
    fn standard_graphs_pass() {
        for (g, m) in [
            (triangular(8).unwrap(), 2),
            (paley(9).unwrap(), 2),
            (lattice(6).unwrap(), 2),
            (petersen(), 2),
            (paley(25).unwrap(), 3),
        ] {
            let report = verify_lemmas(&g, m).unwrap();
            assert!(report.all_passed(), "{report:#?}");
            assert!(report.check("hat_inequality").unwrap().instances > 0);
        }
    }

    #[test]
    fn lattice_reaches_delsarte() {
        let report = verify_lemmas(&lattice(6).unwrap(), 2).unwrap();
        assert_eq!(report.max_clique, 6);
        assert_eq!(report.maximal_clique_orders, vec![6]);
    }

    #[test]
    fn guaranteed_clique_is_exercised() {
        // L(6): no 3-claw, so a clique of order 5 must exist.
        let report = verify_lemmas(&lattice(6).unwrap(), 2).unwrap();
        assert_eq!(report.check("guaranteed_clique").unwrap().instances, 1);
    }

    #[test]
    fn rejects_wrong_inputs() {
        assert!(matches!(
            verify_lemmas(&hat(2, 2).unwrap(), 2),
            Err(OracleError::NotAmplyRegular(_))
        ));
        assert!(matches!(
            verify_lemmas(&petersen(), 3),
            Err(OracleError::WrongSmallestEigenvalue { .. })
        ));
    }
}
