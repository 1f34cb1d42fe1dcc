//! Full report for a single parameter tuple.

use serde::{Deserialize, Serialize};
use srgclique::bounds::{
    claw_guarantee, cvetkovic_coclique_bound, delsarte_bound, delsarte_mu_gap,
    hoffman_coclique_bound, ClawGuarantee, DelsarteGap, GapNotApplicable,
};
use srgclique::clique_poly::{forbidden_range, threshold_start, ForbiddenRange, MaxCliquePoly};
use srgclique::params::{feasibility, spectrum, FeasibilityReport, Spectrum, SrgParams};
use srgclique::sieve::{verdict, Verdict};
use srgclique::{arith::Wide, Overflow};

/// Bounds that need the smallest eigenvalue `−m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralBounds {
    pub m: i128,
    pub delsarte: i128,
    pub hoffman_coclique: i128,
    pub cvetkovic_coclique: i128,
    pub delsarte_gap: Result<DelsarteGap, GapNotApplicable>,
    /// `c₀..c₃` of the clique cubic as decimal strings.
    pub clique_poly: [String; 4],
    pub threshold_start: Option<i128>,
    pub forbidden_range: Option<ForbiddenRange>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub params: SrgParams,
    pub spectrum: Option<Spectrum>,
    /// Why the spectrum is missing, when it is.
    pub spectrum_error: Option<String>,
    pub claw: Option<ClawGuarantee>,
    pub bounds: Option<SpectralBounds>,
    pub feasibility: Option<FeasibilityReport>,
    pub verdict: Option<Verdict>,
}

fn poly_strings(params: &SrgParams, m: i128) -> Result<[String; 4], Overflow> {
    let poly = MaxCliquePoly::for_params(params, m)?;
    Ok(poly.coeffs.map(|c: Wide| c.to_string()))
}

pub fn check_report(params: SrgParams) -> Result<CheckReport, Overflow> {
    let claw = claw_guarantee(&params)?;
    let sp = spectrum(&params);
    let Ok(sp) = sp else {
        return Ok(CheckReport {
            params,
            spectrum: None,
            spectrum_error: sp.err().map(|e| e.to_string()),
            claw,
            bounds: None,
            feasibility: None,
            verdict: None,
        });
    };
    let m = sp.m;
    let bounds = SpectralBounds {
        m,
        delsarte: delsarte_bound(params.k, m),
        hoffman_coclique: hoffman_coclique_bound(params.v, params.k, m),
        cvetkovic_coclique: cvetkovic_coclique_bound(&sp),
        delsarte_gap: delsarte_mu_gap(params.k, m),
        clique_poly: poly_strings(&params, m)?,
        threshold_start: threshold_start(params.mu, m),
        forbidden_range: forbidden_range(&params, m)?,
    };
    Ok(CheckReport {
        params,
        spectrum: Some(sp),
        spectrum_error: None,
        claw,
        bounds: Some(bounds),
        feasibility: Some(feasibility(&params, m)?),
        verdict: Some(verdict(&params, m)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use srgclique::sieve::VerdictStatus;

    #[test]
    fn petersen_report() {
        let r = check_report(SrgParams::new(10, 3, 0, 1).unwrap()).unwrap();
        let b = r.bounds.as_ref().unwrap();
        assert_eq!(b.delsarte, 2);
        assert_eq!(b.hoffman_coclique, 4);
        assert_eq!(r.verdict.unwrap().status, VerdictStatus::Open);
    }

    #[test]
    fn irrational_spectrum_report() {
        let r = check_report(SrgParams::new(13, 6, 2, 3).unwrap()).unwrap();
        assert!(r.spectrum.is_none());
        assert!(r.spectrum_error.is_some());
        assert!(r.verdict.is_none());
    }

    #[test]
    fn round_trip() {
        for p in [(23276, 1330, 372, 58), (13, 6, 2, 3), (10, 3, 0, 1)] {
            let r = check_report(SrgParams::new(p.0, p.1, p.2, p.3).unwrap()).unwrap();
            let text = serde_json::to_string_pretty(&r).unwrap();
            assert_eq!(serde_json::from_str::<CheckReport>(&text).unwrap(), r);
        }
    }
}
