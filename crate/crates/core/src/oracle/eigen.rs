//! Extreme adjacency eigenvalues as floating-point enclosures.
//!
//! The matrix is reduced to tridiagonal form by Householder reflections and
//! the end eigenvalues are isolated by Sturm-count bisection. Each interval is
//! widened by `4·n·ε·‖A‖_F`, a bound on the backward error of the reduction.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{Graph, OracleError};
use crate::params::Spectrum;

/// Largest graph for which eigenvalues are computed.
pub const EIGEN_LIMIT: usize = 1000;

const BISECTION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Enclosure {
    pub lo: f64,
    pub hi: f64,
}

impl Enclosure {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremeEigenvalues {
    pub largest: Enclosure,
    pub smallest: Enclosure,
}

impl ExtremeEigenvalues {
    /// The enclosures contain `k` and `−m` from the exact spectrum.
    pub fn agrees_with(&self, sp: &Spectrum) -> bool {
        self.largest.contains(sp.k as f64) && self.smallest.contains(sp.tau() as f64)
    }
}

/// Number of eigenvalues of the tridiagonal `(d, e)` strictly below `x`.
fn sturm_count(d: &[f64], e: &[f64], x: f64, pivmin: f64) -> usize {
    let mut count = 0;
    let mut q = d[0] - x;
    for i in 0..d.len() {
        if i > 0 {
            q = d[i] - x - e[i - 1] * e[i - 1] / q;
        }
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Interval containing the `idx`-th smallest eigenvalue of `(d, e)`.
fn bisect(d: &[f64], e: &[f64], idx: usize, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let pivmin = f64::MIN_POSITIVE * e.iter().fold(1.0f64, |a, &b| a.max(b * b));
    for _ in 0..200 {
        if hi - lo <= BISECTION_TOL * lo.abs().max(hi.abs()).max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if sturm_count(d, e, mid, pivmin) > idx {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Extreme eigenvalues of a dense symmetric matrix.
pub fn symmetric_extremes(a: DMatrix<f64>) -> ExtremeEigenvalues {
    let n = a.nrows();
    assert!(n > 0 && a.is_square());
    let pad = 4.0 * n as f64 * f64::EPSILON * a.norm();
    let (d, e): (Vec<f64>, Vec<f64>) = if n == 1 {
        (vec![a[(0, 0)]], Vec::new())
    } else {
        let tri = nalgebra::linalg::SymmetricTridiagonal::new(a);
        (
            tri.diagonal().iter().copied().collect(),
            tri.off_diagonal().iter().copied().collect(),
        )
    };
    let radius = (0..n)
        .map(|i| {
            let left = if i > 0 { e[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { e[i].abs() } else { 0.0 };
            d[i].abs() + left + right
        })
        .fold(0.0f64, f64::max)
        + 1.0;
    let enclose = |idx| {
        let (lo, hi) = bisect(&d, &e, idx, -radius, radius);
        Enclosure {
            lo: lo - pad,
            hi: hi + pad,
        }
    };
    ExtremeEigenvalues {
        largest: enclose(n - 1),
        smallest: enclose(0),
    }
}

pub fn extreme_eigenvalues(g: &Graph) -> Result<ExtremeEigenvalues, OracleError> {
    let n = g.n();
    if n == 0 || n > EIGEN_LIMIT {
        return Err(OracleError::TooLarge {
            n,
            limit: EIGEN_LIMIT,
        });
    }
    let a = DMatrix::from_fn(n, n, |i, j| if g.adjacent(i, j) { 1.0 } else { 0.0 });
    Ok(symmetric_extremes(a))
}

/// Extreme eigenvalues of the `H(a,t)` quotient, through its symmetrisation
/// `D^{1/2} Q D^{-1/2}` with part sizes `(1, a, t)`.
pub fn hat_quotient_extremes(a: i128, t: i128) -> ExtremeEigenvalues {
    let (af, tf) = (a as f64, t as f64);
    let b = DMatrix::from_row_slice(
        3,
        3,
        &[
            0.0,
            af.sqrt(),
            0.0,
            af.sqrt(),
            af - 1.0,
            (af * tf).sqrt(),
            0.0,
            (af * tf).sqrt(),
            tf - 1.0,
        ],
    );
    symmetric_extremes(b)
}
