//! Classical clique/coclique bounds and the claw-based clique guarantee.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, isqrt_ceil, product, wide, Overflow};
use crate::params::{Spectrum, SrgParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("clique order {c} outside 2..=k+1 (k = {k})")]
    CliqueOrderOutOfRange { c: i128, k: i128 },
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// `⌊1 + k/m⌋`: no clique of an SRG with smallest eigenvalue `−m` is larger.
pub fn delsarte_bound(k: i128, m: i128) -> i128 {
    1 + arith::div_floor(k, m)
}

/// `⌊vm/(k+m)⌋`, the ratio bound on cocliques of a `k`-regular graph.
pub fn hoffman_coclique_bound(v: i128, k: i128, m: i128) -> i128 {
    let num = wide(v) * wide(m);
    let q = num / wide(k + m);
    // q ≤ v, so it fits in i128.
    q.as_i128()
}

/// `min(v − n₊, v − n₋)` with `n₊ = 1 + f`, `n₋ = g`.
pub fn cvetkovic_coclique_bound(sp: &Spectrum) -> i128 {
    let v = sp.v();
    (v - (1 + sp.f)).min(v - sp.g)
}

/// The smallest claw size `c̄` ruled out by the claw-bound, and the clique
/// order it forces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawGuarantee {
    pub cbar: i128,
    pub guaranteed_order: i128,
}

/// `C(c̄,2)(μ−1)` vs `c̄(λ+1) − k`: the claw-bound slack. Positive means no
/// `c̄`-claw can exist.
pub fn claw_slack(params: &SrgParams, cbar: i128) -> Result<i128, Overflow> {
    let pairs = arith::checked_mul(cbar, cbar - 1, "claw pairs")? / 2;
    let lhs = arith::checked_mul(pairs, params.mu - 1, "claw-bound")?;
    let rhs = arith::checked_mul(cbar, params.lambda + 1, "claw-bound")? - params.k;
    Ok(rhs - lhs)
}

/// Clique order `2 + λ − (c̄−2)(μ−1)` forced when no vertex has a `c̄`-claw.
pub fn forced_clique_order(params: &SrgParams, cbar: i128) -> Result<i128, Overflow> {
    Ok(2 + params.lambda - arith::checked_mul(cbar - 2, params.mu - 1, "clique guarantee")?)
}

/// Smallest `c̄ ≥ 2` with `C(c̄,2)(μ−1) < c̄(λ+1) − k`, which maximises the
/// forced clique order.
pub fn claw_guarantee(params: &SrgParams) -> Result<Option<ClawGuarantee>, Overflow> {
    let SrgParams { k, lambda, mu, .. } = *params;
    let cbar = if mu == 1 {
        // The slack is c̄(λ+1) − k, increasing in c̄.
        let c = (k / (lambda + 1) + 1).max(2);
        (c <= k + 1).then_some(c)
    } else {
        let mut found = None;
        let mut c = 2;
        while c <= k + 1 {
            if claw_slack(params, c)? > 0 {
                found = Some(c);
                break;
            }
            // Slack increments by (λ+1) − c(μ−1); once that is ≤ 0 it never rises again.
            if arith::checked_mul(c, mu - 1, "claw scan")? > lambda {
                break;
            }
            c += 1;
        }
        found
    };
    let Some(cbar) = cbar else {
        return Ok(None);
    };
    let guaranteed_order = forced_clique_order(params, cbar)?;
    Ok((guaranteed_order >= 1).then_some(ClawGuarantee {
        cbar,
        guaranteed_order,
    }))
}

/// Edge count between a clique and the rest of a neighbourhood:
/// `(c−1)(λ−c+2) ≤ (μ−1)(k−c+1)` must hold for a clique of order `c`.
pub fn clique_mu_necessary(params: &SrgParams, c: i128) -> Result<bool, BoundsError> {
    let SrgParams { k, lambda, mu, .. } = *params;
    if c < 2 || c > k + 1 {
        return Err(BoundsError::CliqueOrderOutOfRange { c, k });
    }
    let lhs = product(&[c - 1, lambda - c + 2], "clique edge count")?;
    let rhs = product(&[mu - 1, k - c + 1], "clique edge count")?;
    Ok(lhs <= rhs)
}

/// The open interval `((x − √D)/2, (x + √D)/2)` with `x = k + m²` and
/// `D = (k+m²)(k − 4m³ + 5m²)`; if an SRG has a Delsarte clique its `μ` lies
/// outside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelsarteGap {
    pub twice_center: i128,
    pub discriminant: i128,
}

impl DelsarteGap {
    /// `⌊(x − √D)/2⌋`.
    pub fn lower_floor(&self) -> i128 {
        // Starts at or below the answer: ⌈√D⌉ ≥ √D.
        let mut c = arith::div_floor(self.twice_center - isqrt_ceil(self.discriminant), 2);
        while self.at_or_below_lower(c + 1) {
            c += 1;
        }
        c
    }

    /// `⌈(x + √D)/2⌉`.
    pub fn upper_ceil(&self) -> i128 {
        // Starts at or above the answer.
        let mut c = arith::div_ceil(self.twice_center + isqrt_ceil(self.discriminant), 2);
        while self.at_or_above_upper(c - 1) {
            c -= 1;
        }
        c
    }

    /// `μ ≤ (x − √D)/2`.
    pub fn at_or_below_lower(&self, mu: i128) -> bool {
        // x − 2μ ≥ √D
        let d = self.twice_center - 2 * mu;
        d >= 0 && d * d >= self.discriminant
    }

    /// `μ ≥ (x + √D)/2`.
    pub fn at_or_above_upper(&self, mu: i128) -> bool {
        let d = 2 * mu - self.twice_center;
        d >= 0 && d * d >= self.discriminant
    }

    /// Strictly between the two thresholds.
    pub fn strictly_inside(&self, mu: i128) -> bool {
        !self.at_or_below_lower(mu) && !self.at_or_above_upper(mu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum GapNotApplicable {
    #[error("k < m²(4m − 5)")]
    ValencyTooSmall,
    #[error("m does not divide k, so no clique has order 1 + k/m")]
    NoIntegralDelsarteClique,
}

/// Thresholds of the `μ`-gap for Delsarte cliques; requires `k ≥ m²(4m−5)`.
pub fn delsarte_mu_gap(k: i128, m: i128) -> Result<DelsarteGap, GapNotApplicable> {
    if k < m * m * (4 * m - 5) {
        return Err(GapNotApplicable::ValencyTooSmall);
    }
    let x = k + m * m;
    Ok(DelsarteGap {
        twice_center: x,
        discriminant: x * (k - 4 * m * m * m + 5 * m * m),
    })
}

/// `Ok(true)` when `μ` falls strictly inside the gap, i.e. the graph cannot
/// contain a Delsarte clique.
pub fn delsarte_clique_excluded(params: &SrgParams, m: i128) -> Result<bool, GapNotApplicable> {
    let gap = delsarte_mu_gap(params.k, m)?;
    if params.k % m != 0 {
        return Err(GapNotApplicable::NoIntegralDelsarteClique);
    }
    Ok(gap.strictly_inside(params.mu))
}
