//! Small concrete graphs and brute-force checks of the exact bounds.
//!
//! Descriptors accepted by [`build`] and [`Graph::from_str`]:
//!
//! | descriptor          | graph                                            |
//! |---------------------|--------------------------------------------------|
//! | `triangular:n`      | 2-subsets of `[n]`, adjacent when they meet      |
//! | `lattice:n`         | `n × n` grid, adjacent in the same row or column |
//! | `paley:q`           | `GF(q)`, adjacent when the difference is a square|
//! | `petersen`          | Kneser graph on 2-subsets of `[5]`               |
//! | `hat:a,t`           | `K_{a+t}` plus a vertex joined to `a` of it      |
//! | `complement:<desc>` | complement of another descriptor                 |

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

mod cliques;
mod eigen;
mod lemmas;

pub use cliques::{maximal_cliques, maximum_clique, maximum_coclique, CLIQUE_LIMIT};
pub use eigen::{
    extreme_eigenvalues, hat_quotient_extremes, symmetric_extremes, Enclosure, ExtremeEigenvalues,
    EIGEN_LIMIT,
};
pub use lemmas::{verify_lemmas, LemmaCheck, LemmaReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("unknown graph descriptor `{0}`")]
    UnknownDescriptor(String),
    #[error("bad argument `{arg}` for `{family}`")]
    BadArgument { family: &'static str, arg: String },
    #[error("{family} needs {requirement} (got {got})")]
    OutOfRange {
        family: &'static str,
        requirement: &'static str,
        got: i64,
    },
    #[error("Paley graphs need q ≡ 1 (mod 4) (got {0})")]
    PaleyResidue(i64),
    #[error("Paley order {0} is not a prime or the square of a prime")]
    PaleyOrder(i64),
    #[error("graph has {n} vertices; this operation is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is not amply regular: {0}")]
    NotAmplyRegular(RegularityFailure),
    #[error("smallest eigenvalue {smallest} does not enclose -{m}")]
    WrongSmallestEigenvalue { smallest: Enclosure, m: i128 },
}

/// Simple undirected graph with bitset adjacency rows.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    label: String,
}

impl PartialEq for Graph {
    /// Same vertex set and edges; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, n = {}, e = {})", self.label, self.n(), self.edge_count())
    }
}

impl Graph {
    /// Builds a graph on `n` vertices from a symmetric predicate.
    pub fn from_fn(n: usize, label: impl Into<String>, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph {
            adj,
            label: label.into(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn neighbours(&self, i: usize) -> &FixedBitSet {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    pub fn common_neighbours(&self, i: usize, j: usize) -> usize {
        self.adj[i].intersection_count(&self.adj[j])
    }

    pub fn complement(&self) -> Graph {
        let mut adj = self.adj.clone();
        for (i, row) in adj.iter_mut().enumerate() {
            row.toggle_range(..);
            row.set(i, false);
        }
        Graph {
            adj,
            label: format!("complement:{}", self.label),
        }
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), format!("induced:{}", self.label), |i, j| {
            self.adjacent(vertices[i], vertices[j])
        })
    }

    /// One line per vertex: `id: neighbour ids`.
    pub fn adjacency_list(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.adj.iter().enumerate() {
            out.push_str(&i.to_string());
            out.push(':');
            for j in row.ones() {
                out.push(' ');
                out.push_str(&j.to_string());
            }
            out.push('\n');
        }
        out
    }
}

fn two_subsets(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

pub fn triangular(n: usize) -> Result<Graph, OracleError> {
    if n < 4 {
        return Err(OracleError::OutOfRange {
            family: "triangular",
            requirement: "n >= 4",
            got: n as i64,
        });
    }
    let pairs = two_subsets(n);
    Ok(Graph::from_fn(pairs.len(), format!("triangular:{n}"), |i, j| {
        let (a, b) = (pairs[i], pairs[j]);
        a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
    }))
}

pub fn lattice(n: usize) -> Result<Graph, OracleError> {
    if n < 2 {
        return Err(OracleError::OutOfRange {
            family: "lattice",
            requirement: "n >= 2",
            got: n as i64,
        });
    }
    Ok(Graph::from_fn(n * n, format!("lattice:{n}"), |i, j| {
        (i / n == j / n) != (i % n == j % n)
    }))
}

pub fn petersen() -> Graph {
    let pairs = two_subsets(5);
    Graph::from_fn(10, "petersen", |i, j| {
        let (a, b) = (pairs[i], pairs[j]);
        a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
    })
}

/// `K_{a+t}` on vertices `0..a+t` and a vertex `a+t` adjacent to `0..a`.
pub fn hat(a: usize, t: usize) -> Result<Graph, OracleError> {
    if a == 0 || t == 0 {
        return Err(OracleError::OutOfRange {
            family: "hat",
            requirement: "a >= 1 and t >= 1",
            got: a.min(t) as i64,
        });
    }
    let x = a + t;
    Ok(Graph::from_fn(x + 1, format!("hat:{a},{t}"), |i, j| {
        j < x || i < a
    }))
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Arithmetic in `GF(p)` or `GF(p²) = GF(p)[x]/(x² − d)`, elements encoded
/// as `a + b·p`.
struct Field {
    p: u64,
    degree: u32,
    nonresidue: u64,
}

impl Field {
    fn new(q: u64) -> Option<Field> {
        if is_prime(q) {
            return Some(Field {
                p: q,
                degree: 1,
                nonresidue: 0,
            });
        }
        let p = q.isqrt();
        if p * p != q || !is_prime(p) {
            return None;
        }
        let squares: Vec<bool> = {
            let mut s = vec![false; p as usize];
            for x in 0..p {
                s[(x * x % p) as usize] = true;
            }
            s
        };
        let nonresidue = (1..p).find(|&d| !squares[d as usize])?;
        Some(Field {
            p,
            degree: 2,
            nonresidue,
        })
    }

    fn order(&self) -> u64 {
        self.p.pow(self.degree)
    }

    fn split(&self, x: u64) -> (u64, u64) {
        (x % self.p, x / self.p)
    }

    fn sub(&self, x: u64, y: u64) -> u64 {
        let p = self.p;
        let ((a, b), (c, e)) = (self.split(x), self.split(y));
        (a + p - c) % p + p * ((b + p - e) % p)
    }

    fn square(&self, x: u64) -> u64 {
        let p = self.p;
        let (a, b) = self.split(x);
        // (a + b·x)² = a² + d·b² + 2ab·x
        (a * a + self.nonresidue * (b * b % p)) % p + p * (2 * a * b % p)
    }
}

pub fn paley(q: u64) -> Result<Graph, OracleError> {
    if !(5..=512).contains(&q) {
        return Err(OracleError::OutOfRange {
            family: "paley",
            requirement: "5 <= q <= 512",
            got: q as i64,
        });
    }
    if q % 4 != 1 {
        return Err(OracleError::PaleyResidue(q as i64));
    }
    let field = Field::new(q).ok_or(OracleError::PaleyOrder(q as i64))?;
    let n = field.order() as usize;
    let mut square = vec![false; n];
    for x in 1..n as u64 {
        square[field.square(x) as usize] = true;
    }
    Ok(Graph::from_fn(n, format!("paley:{q}"), |i, j| {
        square[field.sub(i as u64, j as u64) as usize]
    }))
}

fn parse_usize(family: &'static str, arg: &str) -> Result<usize, OracleError> {
    arg.trim().parse().map_err(|_| OracleError::BadArgument {
        family,
        arg: arg.to_string(),
    })
}

/// Builds a graph from a descriptor such as `triangular:8` or `complement:paley:13`.
pub fn build(descriptor: &str) -> Result<Graph, OracleError> {
    let descriptor = descriptor.trim();
    let (family, arg) = match descriptor.split_once(':') {
        Some((f, a)) => (f, Some(a)),
        None => (descriptor, None),
    };
    let need = |family: &'static str| {
        arg.ok_or(OracleError::BadArgument {
            family,
            arg: String::new(),
        })
    };
    match family {
        "triangular" => triangular(parse_usize("triangular", need("triangular")?)?),
        "lattice" => lattice(parse_usize("lattice", need("lattice")?)?),
        "paley" => paley(parse_usize("paley", need("paley")?)? as u64),
        "petersen" if arg.is_none() => Ok(petersen()),
        "hat" => {
            let arg = need("hat")?;
            let (a, t) = arg.split_once(',').ok_or(OracleError::BadArgument {
                family: "hat",
                arg: arg.to_string(),
            })?;
            hat(parse_usize("hat", a)?, parse_usize("hat", t)?)
        }
        "complement" => Ok(build(need("complement")?)?.complement()),
        _ => Err(OracleError::UnknownDescriptor(descriptor.to_string())),
    }
}

impl FromStr for Graph {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        build(s)
    }
}

/// Parameters `(v, k, λ, μ)` found by exhaustive counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmplyRegular {
    pub v: i128,
    pub k: i128,
    pub lambda: i128,
    pub mu: i128,
    /// Every non-adjacent pair has a common neighbour.
    pub diameter_two: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum RegularityFailure {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} has degree {degree}, vertex 0 has {expected}")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("edge {0}-{1} has {count} common neighbours, expected {expected}", .pair.0, .pair.1)]
    LambdaVaries {
        pair: (usize, usize),
        count: usize,
        expected: usize,
    },
    #[error("distance-2 pair {0}-{1} has {count} common neighbours, expected {expected}", .pair.0, .pair.1)]
    MuVaries {
        pair: (usize, usize),
        count: usize,
        expected: usize,
    },
    #[error("graph has no edges or no pair at distance 2")]
    Degenerate,
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.12}, {:.12}]", self.lo, self.hi)
    }
}

pub fn verify_amply_regular(g: &Graph) -> Result<AmplyRegular, RegularityFailure> {
    let n = g.n();
    if n == 0 {
        return Err(RegularityFailure::Empty);
    }
    let k = g.degree(0);
    if let Some(vertex) = (0..n).find(|&i| g.degree(i) != k) {
        return Err(RegularityFailure::NotRegular {
            vertex,
            degree: g.degree(vertex),
            expected: k,
        });
    }
    let (mut lambda, mut mu) = (None, None);
    let mut diameter_two = true;
    for i in 0..n {
        for j in i + 1..n {
            let count = g.common_neighbours(i, j);
            if g.adjacent(i, j) {
                match lambda {
                    None => lambda = Some(count),
                    Some(expected) if expected != count => {
                        return Err(RegularityFailure::LambdaVaries {
                            pair: (i, j),
                            count,
                            expected,
                        })
                    }
                    _ => {}
                }
            } else if count == 0 {
                diameter_two = false;
            } else {
                match mu {
                    None => mu = Some(count),
                    Some(expected) if expected != count => {
                        return Err(RegularityFailure::MuVaries {
                            pair: (i, j),
                            count,
                            expected,
                        })
                    }
                    _ => {}
                }
            }
        }
    }
    match (lambda, mu) {
        (Some(lambda), Some(mu)) => Ok(AmplyRegular {
            v: n as i128,
            k: k as i128,
            lambda: lambda as i128,
            mu: mu as i128,
            diameter_two,
        }),
        _ => Err(RegularityFailure::Degenerate),
    }
}
