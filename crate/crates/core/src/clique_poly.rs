//! The `H(a,t)` inequality, the `a`-bound, and the maximal-clique cubic.
//!
//! `H(a,t)` is `K_{a+t}` plus one vertex joined to exactly `a` of its
//! vertices. If a graph with smallest eigenvalue `−m` contains it as an
//! induced subgraph then `(a − m(m−1))(t − (m−1)²) ≤ (m(m−1))²`. Combined with
//! an edge count around a clique this yields the cubic
//!
//! ```text
//! M(c) = ((c+m−3)(k−c+1) − 2(c−1)(λ−c+2))² − (k−c+1)²(c+m−1)(c−(m−1)(4m−1))
//! ```
//!
//! which must be non-negative at the order `c` of any maximal clique with
//! `c > μ²/(μ−m(m−1)) − m + 1`. Integer points where `M < 0` above that
//! threshold form the forbidden range.
//!
//! All sign decisions are made on exact 256-bit values.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::arith::{self, isqrt_ceil, wide, Overflow, Wide};
use crate::params::SrgParams;

/// Quotient matrix of the equitable partition `{x}`, `Γ(x)`, rest of `H(a,t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HatQuotient {
    pub a: i128,
    pub t: i128,
    pub q: [[i128; 3]; 3],
}

impl HatQuotient {
    /// `det(mI + Q)`.
    pub fn shifted_det(&self, m: i128) -> i128 {
        let mut s = self.q;
        for (i, row) in s.iter_mut().enumerate() {
            row[i] += m;
        }
        s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1])
            - s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0])
            + s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0])
    }

    pub fn row_sums(&self) -> [i128; 3] {
        self.q.map(|row| row.iter().sum())
    }
}

pub fn hat_quotient(a: i128, t: i128) -> HatQuotient {
    HatQuotient {
        a,
        t,
        q: [[0, a, 0], [1, a - 1, t], [0, a, t - 1]],
    }
}

/// `(a − m(m−1))(t − (m−1)²) ≤ (m(m−1))²`.
pub fn hat_inequality(a: i128, t: i128, m: i128) -> bool {
    let mm = m * (m - 1);
    let lhs = wide(a - mm) * wide(t - (m - 1) * (m - 1));
    lhs <= wide(mm) * wide(mm)
}

/// `⌊(c + m − 1 − √D)/2⌋` with `D = (c+m−1)(c − (m−1)(4m−1))`: the most
/// neighbours a vertex outside a maximal clique of order `c` can have in it.
///
/// `None` when `c < (m−1)(4m−1)` or `μ ≥ (c + m − 1 + √D)/2`.
pub fn a_bound(c: i128, m: i128, mu: i128) -> Option<i128> {
    let base = (m - 1) * (4 * m - 1);
    if c < base {
        return None;
    }
    let x = c + m - 1;
    let d = x.checked_mul(c - base)?;
    // μ < (x + √D)/2  ⇔  2μ − x < √D
    let e = 2 * mu - x;
    if e >= 0 && e.checked_mul(e)? >= d {
        return None;
    }
    // Largest a with x − 2a ≥ √D, starting from a lower estimate.
    let mut a = arith::div_floor(x - isqrt_ceil(d), 2);
    while {
        let r = x - 2 * (a + 1);
        r >= 0 && r * r >= d
    } {
        a += 1;
    }
    Some(a)
}

/// `(c + m − 1)(μ − m(m−1)) > μ²`, i.e. `c > μ²/(μ − m(m−1)) − m + 1`.
///
/// `None` when `μ ≤ m(m−1)`, where the clique polynomial gives no information.
pub fn threshold_exceeded(c: i128, mu: i128, m: i128) -> Option<bool> {
    let denom = mu - m * (m - 1);
    if denom <= 0 {
        return None;
    }
    Some(wide(c + m - 1) * wide(denom) > wide(mu) * wide(mu))
}

/// Smallest integer `c` with [`threshold_exceeded`], or `None` when `μ ≤ m(m−1)`.
pub fn threshold_start(mu: i128, m: i128) -> Option<i128> {
    let denom = mu - m * (m - 1);
    if denom <= 0 {
        return None;
    }
    let q = (wide(mu) * wide(mu)).div_euclid(wide(denom));
    Some(q.as_i128() + 2 - m)
}

/// Exact coefficients `c₀ + c₁x + c₂x² + c₃x³` of the maximal-clique cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxCliquePoly {
    pub k: i128,
    pub lambda: i128,
    pub m: i128,
    pub coeffs: [Wide; 4],
}

type Poly = Vec<Wide>;

fn poly_mul(a: &[Wide], b: &[Wide]) -> Result<Poly, Overflow> {
    let mut out = vec![Wide::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            let t = arith::mul(x, y, "clique polynomial expansion")?;
            out[i + j] = arith::add(out[i + j], t, "clique polynomial expansion")?;
        }
    }
    Ok(out)
}

fn poly_sub(a: &[Wide], b: &[Wide]) -> Result<Poly, Overflow> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(Wide::ZERO);
            let y = b.get(i).copied().unwrap_or(Wide::ZERO);
            arith::sub(x, y, "clique polynomial expansion")
        })
        .collect()
}

/// `p + qx` as a polynomial.
fn linear(p: i128, q: i128) -> Poly {
    vec![wide(p), wide(q)]
}

impl MaxCliquePoly {
    pub fn new(k: i128, lambda: i128, m: i128) -> Result<Self, Overflow> {
        let tail = linear(k + 1, -1); // k − c + 1
        let head = poly_mul(&linear(m - 3, 1), &tail)?; // (c+m−3)(k−c+1)
        let edge = poly_mul(&linear(-2, 2), &linear(lambda + 2, -1))?; // 2(c−1)(λ−c+2)
        let inner = poly_sub(&head, &edge)?;
        let square = poly_mul(&inner, &inner)?;
        let disc = poly_mul(
            &linear(m - 1, 1),
            &linear(-(m - 1) * (4 * m - 1), 1),
        )?;
        let rhs = poly_mul(&poly_mul(&tail, &tail)?, &disc)?;
        let full = poly_sub(&square, &rhs)?;
        assert_eq!(full[4], Wide::ZERO, "quartic terms cancel identically");
        Ok(MaxCliquePoly {
            k,
            lambda,
            m,
            coeffs: [full[0], full[1], full[2], full[3]],
        })
    }

    pub fn for_params(params: &SrgParams, m: i128) -> Result<Self, Overflow> {
        Self::new(params.k, params.lambda, m)
    }

    pub fn leading(&self) -> Wide {
        self.coeffs[3]
    }

    /// `M(c)` by Horner's rule.
    pub fn eval(&self, c: i128) -> Result<Wide, Overflow> {
        horner(&self.coeffs, c)
    }

    pub fn sign_at(&self, c: i128) -> Result<Ordering, Overflow> {
        Ok(self.eval(c)?.cmp(&Wide::ZERO))
    }

    /// Forward difference `M(c+1) − M(c) = 3c₃c² + (3c₃ + 2c₂)c + (c₃ + c₂ + c₁)`.
    fn difference(&self) -> Result<[Wide; 3], Overflow> {
        let [_, c1, c2, c3] = self.coeffs;
        let three = wide(3);
        let two = wide(2);
        let what = "clique polynomial difference";
        Ok([
            arith::add(arith::add(c3, c2, what)?, c1, what)?,
            arith::add(arith::mul(three, c3, what)?, arith::mul(two, c2, what)?, what)?,
            arith::mul(three, c3, what)?,
        ])
    }

    /// Maximal runs `[s, e]` of integers in `[lo, hi]` where `M < 0`.
    ///
    /// Uses `O(log(hi − lo))` evaluations: the forward difference is a convex
    /// quadratic, so on the integers `M` increases, then does not increase,
    /// then increases again, and on each monotone piece the negative set is a
    /// prefix or a suffix.
    pub fn negative_runs(&self, lo: i128, hi: i128) -> Result<Vec<(i128, i128)>, Overflow> {
        assert!(self.leading() > Wide::ZERO, "clique polynomial needs k > lambda");
        if lo > hi {
            return Ok(Vec::new());
        }
        let diff = self.difference()?;
        let neg = |c: i128| -> Result<bool, Overflow> { Ok(self.eval(c)? < Wide::ZERO) };
        let nonpos_diff = |c: i128| -> Result<bool, Overflow> { Ok(horner(&diff, c)? <= Wide::ZERO) };

        // Integer minimiser of the difference quadratic.
        let vertex = {
            let num = -diff[1];
            let den = arith::mul(wide(2), diff[2], "clique polynomial difference")?;
            let f = num.div_euclid(den);
            let f = clamp_wide(f, lo - 1, hi + 1);
            if horner(&diff, f + 1)? < horner(&diff, f)? {
                f + 1
            } else {
                f
            }
        };

        // [p, q] is where M(c+1) ≤ M(c); empty when the minimum is positive.
        let mut pieces: Vec<(i128, i128, bool)> = Vec::new(); // (start, end, increasing)
        if !nonpos_diff(vertex)? {
            pieces.push((lo, hi, true));
        } else {
            // p: smallest c ≤ vertex with diff(c) ≤ 0, searched in [lo, vertex].
            let p = if vertex < lo {
                lo
            } else {
                first_true(lo, vertex, &nonpos_diff)?.unwrap_or(vertex)
            };
            // q: largest c ≥ vertex with diff(c) ≤ 0.
            let q = if vertex > hi {
                hi
            } else {
                last_true(vertex, hi, nonpos_diff)?.unwrap_or(vertex)
            };
            if p > lo {
                pieces.push((lo, p.min(hi), true));
            }
            pieces.push((p.max(lo), (q + 1).min(hi), false));
            if q + 1 < hi {
                pieces.push((q + 1, hi, true));
            }
        }

        let mut runs: Vec<(i128, i128)> = Vec::new();
        for (s, e, increasing) in pieces {
            if s > e {
                continue;
            }
            let run = if increasing {
                last_true(s, e, &neg)?.map(|end| (s, end))
            } else {
                first_true(s, e, &neg)?.map(|start| (start, e))
            };
            if let Some((s, e)) = run {
                match runs.last_mut() {
                    Some(last) if s <= last.1 + 1 => last.1 = last.1.max(e),
                    _ => runs.push((s, e)),
                }
            }
        }
        Ok(runs)
    }

    /// Whether `M(c) < 0` for every integer `c` in `[lo, hi]`.
    pub fn negative_throughout(&self, lo: i128, hi: i128) -> Result<bool, Overflow> {
        if lo > hi {
            return Ok(true);
        }
        Ok(self.negative_runs(lo, hi)? == [(lo, hi)])
    }
}

fn horner(coeffs: &[Wide], c: i128) -> Result<Wide, Overflow> {
    let x = wide(c);
    coeffs.iter().rev().try_fold(Wide::ZERO, |acc, &a| {
        arith::add(arith::mul(acc, x, "polynomial evaluation")?, a, "polynomial evaluation")
    })
}

fn clamp_wide(x: Wide, lo: i128, hi: i128) -> i128 {
    if x < wide(lo) {
        lo
    } else if x > wide(hi) {
        hi
    } else {
        x.as_i128()
    }
}

/// Smallest `c ∈ [lo, hi]` with `pred(c)`, for a predicate that is false then true.
fn first_true<F>(lo: i128, hi: i128, mut pred: F) -> Result<Option<i128>, Overflow>
where
    F: FnMut(i128) -> Result<bool, Overflow>,
{
    if lo > hi || !pred(hi)? {
        return Ok(None);
    }
    let (mut a, mut b) = (lo, hi);
    while a < b {
        let mid = a + (b - a) / 2;
        if pred(mid)? {
            b = mid;
        } else {
            a = mid + 1;
        }
    }
    Ok(Some(a))
}

/// Largest `c ∈ [lo, hi]` with `pred(c)`, for a predicate that is true then false.
fn last_true<F>(lo: i128, hi: i128, mut pred: F) -> Result<Option<i128>, Overflow>
where
    F: FnMut(i128) -> Result<bool, Overflow>,
{
    if lo > hi || !pred(lo)? {
        return Ok(None);
    }
    let (mut a, mut b) = (lo, hi);
    while a < b {
        let mid = a + (b - a + 1) / 2;
        if pred(mid)? {
            a = mid;
        } else {
            b = mid - 1;
        }
    }
    Ok(Some(a))
}

/// Inclusive integer interval of maximal-clique orders ruled out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenRange {
    pub lo: i128,
    pub hi: i128,
}

impl ForbiddenRange {
    pub fn contains(&self, c: i128) -> bool {
        self.lo <= c && c <= self.hi
    }
}

/// First run of integers `c` above the threshold with `M(c) < 0`.
///
/// `None` when `μ ≤ m(m−1)` or no such integer exists up to `k + 1`
/// (`M(k+1) = (2k(k−λ−1))² ≥ 0`, so the run always closes by then).
pub fn forbidden_range(params: &SrgParams, m: i128) -> Result<Option<ForbiddenRange>, Overflow> {
    let Some(start) = threshold_start(params.mu, m) else {
        return Ok(None);
    };
    let poly = MaxCliquePoly::for_params(params, m)?;
    let runs = poly.negative_runs(start.max(1), params.k + 1)?;
    Ok(runs.first().map(|&(lo, hi)| ForbiddenRange { lo, hi }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Direct evaluation of the unexpanded expression.
    fn m_direct(k: i128, lambda: i128, m: i128, c: i128) -> Wide {
        let a = wide(c + m - 3) * wide(k - c + 1) - wide(2) * wide(c - 1) * wide(lambda - c + 2);
        let t = wide(k - c + 1);
        a * a - t * t * wide(c + m - 1) * wide(c - (m - 1) * (4 * m - 1))
    }

    fn scan_negative_runs(p: &MaxCliquePoly, lo: i128, hi: i128) -> Vec<(i128, i128)> {
        let mut runs: Vec<(i128, i128)> = Vec::new();
        for c in lo..=hi {
            if p.eval(c).unwrap() < Wide::ZERO {
                match runs.last_mut() {
                    Some(last) if last.1 + 1 == c => last.1 = c,
                    _ => runs.push((c, c)),
                }
            }
        }
        runs
    }

    fn params(v: i128, k: i128, l: i128, mu: i128) -> SrgParams {
        SrgParams::new(v, k, l, mu).unwrap()
    }

    #[test]
    fn hat_quotient_examples() {
        assert_eq!(hat_quotient(1, 1).q, [[0, 1, 0], [1, 0, 1], [0, 1, 0]]);
        assert_eq!(hat_quotient(2, 1).q, [[0, 2, 0], [1, 1, 1], [0, 2, 0]]);
        let h = hat_quotient(12, 9);
        assert_eq!(h.q, [[0, 12, 0], [1, 11, 9], [0, 12, 8]]);
        assert_eq!(h.row_sums(), [12, 21, 20]);
    }

    #[test]
    fn hat_inequality_examples() {
        for t in 1..300 {
            assert!(hat_inequality(12, t, 4));
        }
        assert!(hat_inequality(13, 153, 4));
        assert!(!hat_inequality(13, 154, 4));
        assert!(hat_quotient(13, 153).shifted_det(4) >= 0);
        assert!(hat_quotient(13, 154).shifted_det(4) < 0);
        assert!(!hat_inequality(6, 100, 2));
        assert!(hat_quotient(6, 100).shifted_det(2) < 0);
    }

    #[test]
    fn hat_inequality_matches_determinant() {
        for m in 2..=8 {
            for a in 1..=50 {
                for t in 1..=50 {
                    assert_eq!(
                        hat_inequality(a, t, m),
                        hat_quotient(a, t).shifted_det(m) >= 0,
                        "a={a} t={t} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn a_bound_examples() {
        // Boundary: D = 0.
        for m in 2..6 {
            let c = (m - 1) * (4 * m - 1);
            assert_eq!(a_bound(c, m, 1), Some(arith::div_floor(c + m - 1, 2)));
        }
        // c = 340, m = 4: D = 343·295 = 101185, (343 − 318.09…)/2 = 12.45…
        assert_eq!(a_bound(340, 4, 58), Some(12));
        let d = 343 * 295;
        assert!((343 - 2 * 12) * (343 - 2 * 12) >= d);
        assert!((343 - 2 * 13) * (343 - 2 * 13) < d);
        assert_eq!(a_bound(33, 4, 58), None);
        // μ beyond the upper root.
        assert_eq!(a_bound(45, 4, 24), None);
        assert_eq!(a_bound(45, 4, 23), Some(24));
    }

    #[test]
    fn leading_coefficient_closed_form() {
        for (k, l, m) in [(1330, 372, 4), (4365, 960, 5), (3, 0, 2), (96558, 14357, 7)] {
            let p = MaxCliquePoly::new(k, l, m).unwrap();
            assert_eq!(p.leading(), wide(4 * (k - l) + 4 * m * (m - 2)));
        }
    }

    proptest! {
        #[test]
        fn expansion_matches_direct(k in 1i128..200_000, l in 0i128..50_000, m in 2i128..12, c in -1000i128..300_000) {
            let p = MaxCliquePoly::new(k, l, m).unwrap();
            prop_assert_eq!(p.eval(c).unwrap(), m_direct(k, l, m, c));
            prop_assert_eq!(p.leading(), wide(4 * (k - l) + 4 * m * (m - 2)));
        }

        #[test]
        fn runs_match_scan(k in 3i128..400, frac in 0.0f64..1.0, m in 2i128..6, lo in -50i128..100, len in 0i128..500) {
            let l = ((k - 1) as f64 * frac) as i128;
            let p = MaxCliquePoly::new(k, l, m).unwrap();
            let hi = lo + len;
            prop_assert_eq!(p.negative_runs(lo, hi).unwrap(), scan_negative_runs(&p, lo, hi));
        }
    }

    #[test]
    fn family_instance_signs() {
        // (38875, 2046, 569, 82) with m = 4.
        let p = MaxCliquePoly::new(2046, 569, 4).unwrap();
        assert!(p.eval(0).unwrap() > Wide::ZERO);
        assert!(p.eval(2 + 569 - 4 * (82 - 1)).unwrap() < Wide::ZERO);
        assert!(p.eval(1 + 2046 / 4).unwrap() < Wide::ZERO);
    }

    #[test]
    fn eval_examples() {
        let p = MaxCliquePoly::new(1330, 372, 4).unwrap();
        assert!(p.eval(146).unwrap() < Wide::ZERO);
        assert!(p.eval(340).unwrap() < Wide::ZERO);
        assert!(p.eval(341).unwrap() >= Wide::ZERO);
        assert_eq!(p.eval(0).unwrap(), p.coeffs[0]);
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(threshold_exceeded(71, 58, 4), Some(true));
        assert_eq!(threshold_exceeded(70, 58, 4), Some(false));
        assert_eq!(threshold_exceeded(136, 115, 5), Some(true));
        assert_eq!(threshold_exceeded(135, 115, 5), Some(false));
        let m = 4;
        let mu = m * (m - 1) + 1;
        assert_eq!(threshold_exceeded(mu * mu - m + 2, mu, m), Some(true));
        assert_eq!(threshold_exceeded(mu * mu - m + 1, mu, m), Some(false));
        assert_eq!(threshold_exceeded(1000, 12, 4), None);
        assert_eq!(threshold_start(58, 4), Some(71));
        assert_eq!(threshold_start(115, 5), Some(136));
    }

    #[test]
    fn threshold_start_is_sharp() {
        for m in 2..8 {
            for mu in (m * (m - 1) + 1)..(m * (m - 1) + 200) {
                let s = threshold_start(mu, m).unwrap();
                assert_eq!(threshold_exceeded(s, mu, m), Some(true));
                assert_eq!(threshold_exceeded(s - 1, mu, m), Some(false));
            }
        }
    }

    #[test]
    fn forbidden_range_examples() {
        let r = forbidden_range(&params(23276, 1330, 372, 58), 4).unwrap();
        assert_eq!(r, Some(ForbiddenRange { lo: 71, hi: 340 }));
        let r = forbidden_range(&params(38875, 2046, 569, 82), 4).unwrap();
        assert_eq!(r, Some(ForbiddenRange { lo: 94, hi: 539 }));
        let r = forbidden_range(&params(12031999, 96558, 14357, 665), 7).unwrap();
        assert_eq!(r, Some(ForbiddenRange { lo: 704, hi: 14118 }));
        // μ ≤ m(m−1)
        assert_eq!(forbidden_range(&params(36, 10, 4, 2), 2).unwrap(), None);
    }
}
