//! Bron–Kerbosch with Tomita pivoting over bitset rows.

use fixedbitset::FixedBitSet;

use super::{Graph, OracleError};

/// Largest graph for which clique searches are attempted.
pub const CLIQUE_LIMIT: usize = 200;

fn check_size(g: &Graph) -> Result<(), OracleError> {
    if g.n() > CLIQUE_LIMIT {
        return Err(OracleError::TooLarge {
            n: g.n(),
            limit: CLIQUE_LIMIT,
        });
    }
    Ok(())
}

fn full_set(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

/// Pivot `u ∈ P ∪ X` maximising `|P ∩ N(u)|`.
fn pivot(g: &Graph, p: &FixedBitSet, x: &FixedBitSet) -> Option<usize> {
    p.union(x)
        .max_by_key(|&u| g.neighbours(u).intersection_count(p))
}

fn expand(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    let Some(u) = pivot(g, &p, &x) else {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    };
    let mut candidates = p.clone();
    candidates.difference_with(g.neighbours(u));
    for w in candidates.ones() {
        let nw = g.neighbours(w);
        let mut p2 = p.clone();
        p2.intersect_with(nw);
        let mut x2 = x.clone();
        x2.intersect_with(nw);
        r.push(w);
        expand(g, r, p2, x2, out);
        r.pop();
        p.set(w, false);
        x.insert(w);
    }
}

/// Every maximal clique, each sorted, in discovery order.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>, OracleError> {
    check_size(g)?;
    let n = g.n();
    let mut out = Vec::new();
    if n > 0 {
        expand(g, &mut Vec::new(), full_set(n), FixedBitSet::with_capacity(n), &mut out);
    }
    Ok(out)
}

fn search_max(g: &Graph, r: &mut Vec<usize>, mut p: FixedBitSet, best: &mut Vec<usize>) {
    if p.is_clear() {
        if r.len() > best.len() {
            *best = r.clone();
        }
        return;
    }
    while let Some(w) = p.minimum() {
        if r.len() + p.count_ones(..) <= best.len() {
            return;
        }
        let mut p2 = p.clone();
        p2.intersect_with(g.neighbours(w));
        r.push(w);
        search_max(g, r, p2, best);
        r.pop();
        p.set(w, false);
    }
}

/// A maximum clique, found by branch and bound.
pub fn maximum_clique(g: &Graph) -> Result<Vec<usize>, OracleError> {
    check_size(g)?;
    let mut best = Vec::new();
    search_max(g, &mut Vec::new(), full_set(g.n()), &mut best);
    best.sort_unstable();
    Ok(best)
}

/// A maximum independent set.
pub fn maximum_coclique(g: &Graph) -> Result<Vec<usize>, OracleError> {
    maximum_clique(&g.complement())
}
