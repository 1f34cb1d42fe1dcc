//! Sieve output in CSV, Markdown and JSON.

use serde::Serialize;
use srgclique::sieve::SieveRow;

pub const CSV_HEADER: &str =
    "m,mu,v,k,lambda,sigma,f,g,forbidden_lo,forbidden_hi,delsarte,cbar,guaranteed,verdict";

#[derive(Serialize)]
struct CsvRecord {
    m: i128,
    mu: i128,
    v: i128,
    k: i128,
    lambda: i128,
    sigma: i128,
    f: i128,
    g: i128,
    forbidden_lo: Option<i128>,
    forbidden_hi: Option<i128>,
    delsarte: i128,
    cbar: Option<i128>,
    guaranteed: Option<i128>,
    verdict: &'static str,
}

impl From<&SieveRow> for CsvRecord {
    fn from(row: &SieveRow) -> Self {
        let ev = row.verdict.evidence;
        let range = ev.and_then(|e| e.forbidden_range);
        CsvRecord {
            m: row.m,
            mu: row.params.mu,
            v: row.params.v,
            k: row.params.k,
            lambda: row.params.lambda,
            sigma: row.spectrum.sigma,
            f: row.spectrum.f,
            g: row.spectrum.g,
            forbidden_lo: range.map(|r| r.lo),
            forbidden_hi: range.map(|r| r.hi),
            delsarte: srgclique::bounds::delsarte_bound(row.params.k, row.m),
            cbar: ev.map(|e| e.cbar),
            guaranteed: ev.map(|e| e.guaranteed_order),
            verdict: row.verdict.status.as_str(),
        }
    }
}

/// Header plus one line per row, LF endings.
pub fn csv(rows: &[SieveRow]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        w.serialize(CsvRecord::from(row)).expect("in-memory write");
    }
    let body = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii");
    format!("{CSV_HEADER}\n{body}")
}

fn opt(x: Option<i128>) -> String {
    x.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

/// Table with columns `μ | v | k | λ | forbidden range | Delsarte bound |
/// guaranteed clique order`, plus a verdict column when `with_verdict`.
pub fn markdown(rows: &[SieveRow], with_verdict: bool) -> String {
    let mut out = String::from(
        "| μ | v | k | λ | forbidden range | Delsarte bound | guaranteed clique order |",
    );
    out.push_str(if with_verdict { " verdict |\n" } else { "\n" });
    out.push_str("|---|---|---|---|---|---|---|");
    out.push_str(if with_verdict { "---|\n" } else { "\n" });
    for row in rows {
        let rec = CsvRecord::from(row);
        let range = match (rec.forbidden_lo, rec.forbidden_hi) {
            (Some(lo), Some(hi)) => format!("[{lo}, {hi}]"),
            _ => "-".into(),
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} |",
            rec.mu,
            rec.v,
            rec.k,
            rec.lambda,
            range,
            rec.delsarte,
            opt(rec.guaranteed)
        ));
        if with_verdict {
            out.push_str(&format!(" {} |", rec.verdict));
        }
        out.push('\n');
    }
    out
}

pub fn json(rows: &[SieveRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialise");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use srgclique::params::{spectrum, SrgParams};
    use srgclique::sieve::verdict;

    fn row(v: i128, k: i128, l: i128, mu: i128, m: i128) -> SieveRow {
        let params = SrgParams::new(v, k, l, mu).unwrap();
        SieveRow {
            m,
            params,
            spectrum: spectrum(&params).unwrap(),
            verdict: verdict(&params, m).unwrap(),
        }
    }

    #[test]
    fn csv_layout() {
        let text = csv(&[row(23276, 1330, 372, 58, 4), row(9, 4, 1, 2, 2)]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(
            lines[1],
            "4,58,23276,1330,372,318,285,22990,71,340,333,6,146,nonexistent_clique_sieve"
        );
        assert!(lines[2].starts_with("2,2,9,4,1,1,4,4,"));
        assert!(lines[2].ends_with(",open"));
        assert!(!text.contains('\r'));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn markdown_layout() {
        let text = markdown(&[row(23276, 1330, 372, 58, 4)], false);
        assert_eq!(
            text.lines().nth(2).unwrap(),
            "| 58 | 23276 | 1330 | 372 | [71, 340] | 333 | 146 |"
        );
        let text = markdown(&[row(23276, 1330, 372, 58, 4)], true);
        assert!(text.lines().nth(2).unwrap().ends_with("| nonexistent_clique_sieve |"));
    }

    #[test]
    fn json_round_trip() {
        let rows = vec![row(23276, 1330, 372, 58, 4)];
        let back: Vec<SieveRow> = serde_json::from_str(&json(&rows)).unwrap();
        assert_eq!(back, rows);
    }
}
