//! Parameter tuples, their spectra, and the feasibility predicate.
//!
//! A strongly regular graph with parameters `(v, k, λ, μ)` has eigenvalues
//! `k > σ > τ` where `σ, τ` are the roots of `x² − (λ−μ)x − (k−μ)`. Throughout
//! the crate the smallest eigenvalue is written `τ = −m` with `m ≥ 2`, and the
//! identities `λ − μ = σ − m`, `k − μ = σm` are used to move between
//! `(m, σ, μ)` and `(v, k, λ, μ)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, exact_sqrt, product, Overflow};

/// Why a tuple is not a consistent `(v, k, λ, μ)` parameter set.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("parameters must satisfy v, k, mu >= 1 and lambda >= 0")]
    OutOfDomain,
    #[error("need v - 1 > k (v = {v}, k = {k})")]
    TooFewVertices { v: i128, k: i128 },
    #[error("need k >= mu (k = {k}, mu = {mu})")]
    MuExceedsValency { k: i128, mu: i128 },
    #[error("need k > lambda (k = {k}, lambda = {lambda})")]
    LambdaTooLarge { k: i128, lambda: i128 },
    #[error("v * k = {v} * {k} is odd")]
    Handshake { v: i128, k: i128 },
    #[error("mu = {mu} does not divide k(k - lambda - 1) = {numerator}")]
    Divisibility { numerator: i128, mu: i128 },
    #[error("v = {v} but 1 + k + k(k - lambda - 1)/mu = {expected}")]
    VertexCount { v: i128, expected: i128 },
    #[error("lambda = sigma + mu - m is negative")]
    NegativeLambda,
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// Why a parameter set has no integral spectrum with `σ ≥ 1`, `m ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("discriminant {0} of the eigenvalue quadratic is not a perfect square")]
    IrrationalEigenvalues(i128),
    #[error("eigenvalues are half-integers")]
    HalfIntegralEigenvalues,
    #[error("eigenvalues sigma = {sigma}, tau = {tau} outside sigma >= 1, tau <= -2")]
    EigenvaluesOutOfRange { sigma: i128, tau: i128 },
    #[error("multiplicities are not positive integers")]
    FractionalMultiplicity,
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// An integer tuple `(v, k, λ, μ)`.
///
/// Construct with [`SrgParams::new`] to have the counting invariants checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: i128,
    pub k: i128,
    pub lambda: i128,
    pub mu: i128,
}

impl SrgParams {
    pub fn new(v: i128, k: i128, lambda: i128, mu: i128) -> Result<Self, ParamsError> {
        let p = SrgParams { v, k, lambda, mu };
        p.validate()?;
        Ok(p)
    }

    /// Checks `v − 1 > k ≥ μ`, `k > λ`, even `vk`, and the vertex-count identity.
    pub fn validate(&self) -> Result<(), ParamsError> {
        let SrgParams { v, k, lambda, mu } = *self;
        if v < 1 || k < 1 || mu < 1 || lambda < 0 {
            return Err(ParamsError::OutOfDomain);
        }
        if v - 1 <= k {
            return Err(ParamsError::TooFewVertices { v, k });
        }
        if k < mu {
            return Err(ParamsError::MuExceedsValency { k, mu });
        }
        if k <= lambda {
            return Err(ParamsError::LambdaTooLarge { k, lambda });
        }
        // v and k are both at least 1, so vk is odd iff both are odd.
        if v % 2 == 1 && k % 2 == 1 {
            return Err(ParamsError::Handshake { v, k });
        }
        let expected = vertex_count(k, lambda, mu)?;
        if expected != v {
            return Err(ParamsError::VertexCount { v, expected });
        }
        Ok(())
    }
}

/// `1 + k + k(k−λ−1)/μ`, or a divisibility error.
pub fn vertex_count(k: i128, lambda: i128, mu: i128) -> Result<i128, ParamsError> {
    let numerator = arith::checked_mul(k, k - lambda - 1, "k(k - lambda - 1)")?;
    if numerator % mu != 0 {
        return Err(ParamsError::Divisibility { numerator, mu });
    }
    Ok(1 + k + numerator / mu)
}

/// Eigenvalues `k > σ > −m` with multiplicities `1, f, g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Spectrum {
    pub k: i128,
    pub sigma: i128,
    pub m: i128,
    pub f: i128,
    pub g: i128,
}

impl Spectrum {
    pub fn tau(&self) -> i128 {
        -self.m
    }

    pub fn v(&self) -> i128 {
        1 + self.f + self.g
    }
}

/// Builds `(v, σm+μ, σ+μ−m, μ)` from the smallest eigenvalue `−m`, the second
/// eigenvalue `σ` and `μ`.
pub fn params_from_sigma_mu(m: i128, sigma: i128, mu: i128) -> Result<SrgParams, ParamsError> {
    if m < 2 || sigma < 1 || mu < 1 {
        return Err(ParamsError::OutOfDomain);
    }
    let lambda = sigma + mu - m;
    if lambda < 0 {
        return Err(ParamsError::NegativeLambda);
    }
    let k = arith::checked_mul(sigma, m, "sigma * m")? + mu;
    let v = vertex_count(k, lambda, mu)?;
    SrgParams::new(v, k, lambda, mu)
}

/// The integral spectrum of a parameter set.
///
/// Conference-type parameters (irrational eigenvalues) and tuples with
/// fractional multiplicities are rejected.
pub fn spectrum(params: &SrgParams) -> Result<Spectrum, SpectrumError> {
    let SrgParams { v, k, lambda, mu } = *params;
    let diff = lambda - mu;
    let disc = arith::checked_mul(diff, diff, "eigenvalue discriminant")?
        .checked_add(4 * (k - mu))
        .ok_or(Overflow("eigenvalue discriminant"))?;
    let root = exact_sqrt(disc).ok_or(SpectrumError::IrrationalEigenvalues(disc))?;
    if (diff + root) % 2 != 0 {
        return Err(SpectrumError::HalfIntegralEigenvalues);
    }
    let sigma = (diff + root) / 2;
    let tau = (diff - root) / 2;
    if sigma < 1 || tau > -2 {
        return Err(SpectrumError::EigenvaluesOutOfRange { sigma, tau });
    }
    let gap = arith::wide(sigma - tau);
    let trace_term = arith::wide(v - 1) * arith::wide(diff) + arith::wide(2 * k);
    if trace_term % gap != arith::Wide::ZERO {
        return Err(SpectrumError::FractionalMultiplicity);
    }
    let twice_f = (v - 1) - arith::narrow(trace_term / gap, "eigenvalue multiplicity")?;
    if twice_f % 2 != 0 {
        return Err(SpectrumError::FractionalMultiplicity);
    }
    let f = twice_f / 2;
    let g = v - 1 - f;
    if f < 1 || g < 1 {
        return Err(SpectrumError::FractionalMultiplicity);
    }
    Ok(Spectrum {
        k,
        sigma,
        m: -tau,
        f,
        g,
    })
}

/// Flags of the feasibility predicate; `feasible` is their conjunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub integral_spectrum: bool,
    pub krein_ok: bool,
    pub absolute_ok: bool,
    pub mu_bound_ok: bool,
    pub snb_sigma_ok: bool,
    pub sanity_ok: bool,
    pub feasible: bool,
}

/// Upper bound `m³(2m−3)` on `μ` for smallest eigenvalue `−m`.
pub fn mu_bound(m: i128) -> i128 {
    m * m * m * (2 * m - 3)
}

/// Largest `σ` not covered by the Latin-square / Steiner-block classification:
/// `½m(m−1)(μ+1) − 1`. `m(m−1)` is even, so this is an integer.
pub fn sigma_bound(m: i128, mu: i128) -> i128 {
    m * (m - 1) / 2 * (mu + 1) - 1
}

/// True for the two `μ` values (`m(m−1)` and `m²`) whose large-`σ` members are
/// Latin square graphs or Steiner block graphs.
pub fn is_classified_mu(m: i128, mu: i128) -> bool {
    mu == m * (m - 1) || mu == m * m
}

/// Krein conditions for eigenvalues `r = σ`, `s = τ`:
/// `(r+1)(k+r+2rs) ≤ (k+r)(s+1)²` and `(s+1)(k+s+2rs) ≤ (k+s)(r+1)²`.
pub fn krein_conditions(sp: &Spectrum) -> Result<bool, Overflow> {
    let (k, r, s) = (sp.k, sp.sigma, sp.tau());
    let two_rs = product(&[2, r, s], "Krein 2rs")?;
    let first_lhs = arith::mul(
        arith::wide(r + 1),
        arith::add(arith::wide(k + r), two_rs, "Krein")?,
        "Krein",
    )?;
    let first_rhs = product(&[k + r, s + 1, s + 1], "Krein")?;
    let second_lhs = arith::mul(
        arith::wide(s + 1),
        arith::add(arith::wide(k + s), two_rs, "Krein")?,
        "Krein",
    )?;
    let second_rhs = product(&[k + s, r + 1, r + 1], "Krein")?;
    Ok(first_lhs <= first_rhs && second_lhs <= second_rhs)
}

/// Absolute bound `v ≤ ½f(f+3)` and `v ≤ ½g(g+3)`.
pub fn absolute_bound(sp: &Spectrum) -> Result<bool, Overflow> {
    let twice_v = arith::wide(sp.v()) * arith::wide(2);
    let f_side = product(&[sp.f, sp.f + 3], "absolute bound")?;
    let g_side = product(&[sp.g, sp.g + 3], "absolute bound")?;
    Ok(twice_v <= f_side && twice_v <= g_side)
}

/// Evaluates every feasibility flag for `params` with smallest eigenvalue `−m`.
pub fn feasibility(params: &SrgParams, m: i128) -> Result<FeasibilityReport, Overflow> {
    let sanity_ok = params.validate().is_ok();
    let sp = spectrum(params).ok().filter(|s| s.m == m);
    let (krein_ok, absolute_ok) = match &sp {
        Some(s) => (krein_conditions(s)?, absolute_bound(s)?),
        None => (false, false),
    };
    let mu_bound_ok = params.mu <= mu_bound(m);
    // σ − m = λ − μ holds for any tuple with smallest eigenvalue −m.
    let sigma = params.lambda - params.mu + m;
    let snb_sigma_ok = is_classified_mu(m, params.mu) || sigma <= sigma_bound(m, params.mu);
    let integral_spectrum = sp.is_some();
    Ok(FeasibilityReport {
        integral_spectrum,
        krein_ok,
        absolute_ok,
        mu_bound_ok,
        snb_sigma_ok,
        sanity_ok,
        feasible: integral_spectrum
            && krein_ok
            && absolute_ok
            && mu_bound_ok
            && snb_sigma_ok
            && sanity_ok,
    })
}
