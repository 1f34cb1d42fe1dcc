//! Enumeration of feasible parameters for a fixed smallest eigenvalue and the
//! clique-based nonexistence verdict.
//!
//! A tuple is ruled out when the claw-bound forces a clique of order `L`
//! (hence a maximal clique of order in `[L, U]`, `U` the Delsarte bound) and
//! either `L > U`, or every integer in `[L, U]` lies above the clique
//! polynomial threshold with `M(c) < 0`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, Overflow, Wide};
use crate::bounds::{self, claw_guarantee, delsarte_bound, ClawGuarantee};
use crate::clique_poly::{forbidden_range, threshold_exceeded, ForbiddenRange, MaxCliquePoly};
use crate::params::{
    self, feasibility, is_classified_mu, mu_bound, params_from_sigma_mu, sigma_bound, spectrum,
    FeasibilityReport, Spectrum, SrgParams,
};

/// Ranges `[L, U]` up to this length are checked point by point; longer ones
/// use the monotone-piece certificate from [`MaxCliquePoly::negative_runs`].
pub const EXHAUSTIVE_SPAN: i128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Open,
    NonexistentCliqueSieve,
    NonexistentClawExceedsDelsarte,
}

impl VerdictStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictStatus::Open => "open",
            VerdictStatus::NonexistentCliqueSieve => "nonexistent_clique_sieve",
            VerdictStatus::NonexistentClawExceedsDelsarte => "nonexistent_claw_exceeds_delsarte",
        }
    }

    pub fn is_nonexistent(&self) -> bool {
        !matches!(self, VerdictStatus::Open)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub cbar: i128,
    pub guaranteed_order: i128,
    pub forbidden_range: Option<ForbiddenRange>,
    pub delsarte_bound: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub evidence: Option<Evidence>,
    pub note: Option<String>,
}

impl Verdict {
    /// Re-derives the status from the evidence alone.
    pub fn recheck(&self, params: &SrgParams, m: i128) -> Result<bool, Overflow> {
        let Some(ev) = self.evidence else {
            return Ok(self.status == VerdictStatus::Open);
        };
        let claw_ok = bounds::claw_slack(params, ev.cbar)? > 0
            && bounds::forced_clique_order(params, ev.cbar)? == ev.guaranteed_order
            && ev.delsarte_bound == delsarte_bound(params.k, m);
        match self.status {
            VerdictStatus::Open => Ok(true),
            VerdictStatus::NonexistentClawExceedsDelsarte => {
                Ok(claw_ok && ev.guaranteed_order > ev.delsarte_bound)
            }
            VerdictStatus::NonexistentCliqueSieve => {
                let (l, u) = (ev.guaranteed_order, ev.delsarte_bound);
                let poly = MaxCliquePoly::for_params(params, m)?;
                let mut all_negative = true;
                for c in l..=u {
                    if poly.eval(c)? >= Wide::ZERO {
                        all_negative = false;
                        break;
                    }
                }
                Ok(claw_ok
                    && params.mu > m * (m - 1)
                    && threshold_exceeded(l, params.mu, m) == Some(true)
                    && all_negative)
            }
        }
    }
}

/// `M(c) < 0` for every integer in `[lo, hi]`.
fn negative_on(poly: &MaxCliquePoly, lo: i128, hi: i128) -> Result<bool, Overflow> {
    if hi - lo < EXHAUSTIVE_SPAN {
        for c in lo..=hi {
            if poly.eval(c)? >= Wide::ZERO {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        poly.negative_throughout(lo, hi)
    }
}

/// Nonexistence verdict for `params` with smallest eigenvalue `−m`.
pub fn verdict(params: &SrgParams, m: i128) -> Result<Verdict, Overflow> {
    let note = is_classified_mu(m, params.mu).then(|| {
        format!(
            "mu = {} equals m(m-1) or m^2; large-sigma members are Latin square or Steiner block graphs, not sieved",
            params.mu
        )
    });
    let upper = delsarte_bound(params.k, m);
    let Some(ClawGuarantee {
        cbar,
        guaranteed_order,
    }) = claw_guarantee(params)?
    else {
        return Ok(Verdict {
            status: VerdictStatus::Open,
            evidence: None,
            note,
        });
    };
    let evidence = Evidence {
        cbar,
        guaranteed_order,
        forbidden_range: forbidden_range(params, m)?,
        delsarte_bound: upper,
    };
    let status = if note.is_some() {
        VerdictStatus::Open
    } else if guaranteed_order > upper {
        VerdictStatus::NonexistentClawExceedsDelsarte
    } else if params.mu > m * (m - 1)
        && threshold_exceeded(guaranteed_order, params.mu, m) == Some(true)
        && negative_on(&MaxCliquePoly::for_params(params, m)?, guaranteed_order, upper)?
    {
        VerdictStatus::NonexistentCliqueSieve
    } else {
        VerdictStatus::Open
    };
    Ok(Verdict {
        status,
        evidence: Some(evidence),
        note,
    })
}

/// A parameter set that passed every feasibility filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibleTuple {
    pub params: SrgParams,
    pub spectrum: Spectrum,
}

/// Feasible tuples with `μ` fixed, in increasing `σ`.
fn scan_mu(m: i128, mu: i128) -> Result<Vec<FeasibleTuple>, Overflow> {
    let mut out = Vec::new();
    let lo = (m - mu).max(1);
    let hi = sigma_bound(m, mu);
    if lo > hi {
        return Ok(out);
    }
    // k(k−λ−1) = (σm + μ)(m−1)(σ+1) ≡ m(m−1)σ(σ+1) (mod μ): a condition on σ mod μ.
    let modulus = mu as u128;
    let mm = (m * (m - 1)) as u128 % modulus;
    let good: Vec<bool> = (0..modulus)
        .map(|r| (mm * (r * ((r + 1) % modulus) % modulus)).is_multiple_of(modulus))
        .collect();
    let mut residue = (lo as u128) % modulus;
    for sigma in lo..=hi {
        if good[residue as usize] {
            if let Ok(params) = params_from_sigma_mu(m, sigma, mu) {
                if let Ok(sp) = spectrum(&params) {
                    if feasibility(&params, m)?.feasible {
                        out.push(FeasibleTuple {
                            params,
                            spectrum: sp,
                        });
                    }
                }
            }
        }
        residue += 1;
        if residue == modulus {
            residue = 0;
        }
    }
    Ok(out)
}

#[derive(Debug, Error)]
pub enum SieveError {
    #[error("smallest eigenvalue -m needs m >= 2 (got {0})")]
    InvalidM(i128),
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

fn with_workers<T: Send>(
    workers: usize,
    job: impl FnOnce() -> T + Send,
) -> Result<T, SieveError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| SieveError::Pool(e.to_string()))?;
    Ok(pool.install(job))
}

/// All feasible tuples with smallest eigenvalue `−m`, sorted by `(μ, v)`.
///
/// `μ ∈ {m(m−1), m²}` is skipped. The `μ` loop is split across `workers`
/// threads (`0` lets rayon decide); the output order does not depend on it.
pub fn enumerate_feasible(m: i128, workers: usize) -> Result<Vec<FeasibleTuple>, SieveError> {
    if m < 2 {
        return Err(SieveError::InvalidM(m));
    }
    let mus: Vec<i128> = (1..=mu_bound(m))
        .filter(|&mu| !is_classified_mu(m, mu))
        .collect();
    let chunks = with_workers(workers, || {
        mus.par_iter()
            .map(|&mu| scan_mu(m, mu))
            .collect::<Result<Vec<_>, Overflow>>()
    })??;
    let mut all: Vec<FeasibleTuple> = chunks.into_iter().flatten().collect();
    all.sort_by_key(|t| (t.params.mu, t.params.v));
    Ok(all)
}

/// One tuple with its verdict, as emitted by [`sieve_run`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveRow {
    pub m: i128,
    pub params: SrgParams,
    pub spectrum: Spectrum,
    pub verdict: Verdict,
}

/// Feasible tuples for `m` ruled out by the clique sieve (plus the open ones
/// when `include_open`), sorted by `(μ, v)`.
pub fn sieve_run(m: i128, include_open: bool, workers: usize) -> Result<Vec<SieveRow>, SieveError> {
    let feasible = enumerate_feasible(m, workers)?;
    let rows = with_workers(workers, || {
        feasible
            .par_iter()
            .map(|t| {
                verdict(&t.params, m).map(|verdict| SieveRow {
                    m,
                    params: t.params,
                    spectrum: t.spectrum,
                    verdict,
                })
            })
            .collect::<Result<Vec<_>, Overflow>>()
    })??;
    Ok(rows
        .into_iter()
        .filter(|r| include_open || r.verdict.status.is_nonexistent())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("the family is defined for m >= 4 with m_lo <= m_hi (got {0}..={1})")]
    InvalidRange(i128, i128),
    #[error("m = {m}: {source}")]
    Params {
        m: i128,
        source: params::ParamsError,
    },
    #[error("m = {m}: {source}")]
    Overflow { m: i128, source: Overflow },
}

/// The parametric family, in `n = m − 3`:
///
/// * `μ = n³ + 10n² + 33n + 38`
/// * `λ = (n⁵ + 15n⁴ + 91n³ + 283n²)/2 + 226n + 148`
/// * `k = (m+1)(m(2−μ) + 2λ)/2 + 1`
/// * `v = 1 + k + k(k−λ−1)/μ`
pub fn family_params(m: i128) -> Result<SrgParams, FamilyError> {
    if m < 4 {
        return Err(FamilyError::InvalidRange(m, m));
    }
    let of = |source| FamilyError::Overflow { m, source };
    let n = m - 3;
    let pow = |e: u32| n.checked_pow(e).ok_or(Overflow("family parameters"));
    let mu = pow(3).map_err(of)? + 10 * n * n + 33 * n + 38;
    let lambda_half = pow(5).map_err(of)? + 15 * pow(4).map_err(of)? + 91 * pow(3).map_err(of)?
        + 283 * n * n;
    debug_assert_eq!(lambda_half % 2, 0);
    let lambda = lambda_half / 2 + 226 * n + 148;
    let k_twice = arith::checked_mul(m + 1, m * (2 - mu) + 2 * lambda, "family valency").map_err(of)?;
    debug_assert_eq!(k_twice % 2, 0);
    let k = k_twice / 2 + 1;
    let v = params::vertex_count(k, lambda, mu).map_err(|source| FamilyError::Params { m, source })?;
    SrgParams::new(v, k, lambda, mu).map_err(|source| FamilyError::Params { m, source })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub m: i128,
    pub params: SrgParams,
    pub feasibility: FeasibilityReport,
    pub verdict: Verdict,
}

impl FamilyRow {
    pub fn confirmed(&self) -> bool {
        self.feasibility.feasible && self.verdict.status == VerdictStatus::NonexistentCliqueSieve
    }
}

/// Builds and judges the family member for every `m` in `m_lo..=m_hi`.
pub fn family_scan(m_lo: i128, m_hi: i128) -> Result<Vec<FamilyRow>, FamilyError> {
    if m_lo < 4 || m_lo > m_hi {
        return Err(FamilyError::InvalidRange(m_lo, m_hi));
    }
    (m_lo..=m_hi)
        .map(|m| {
            let params = family_params(m)?;
            let of = |source| FamilyError::Overflow { m, source };
            Ok(FamilyRow {
                m,
                params,
                feasibility: feasibility(&params, m).map_err(of)?,
                verdict: verdict(&params, m).map_err(of)?,
            })
        })
        .collect()
}
