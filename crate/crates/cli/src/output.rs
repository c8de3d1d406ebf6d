//! Rendering of polynomials, series and reports in the three formats.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use qaffine::charseries::LatticeSeries;
use qaffine::{QPoly, Report, TSeries};

use crate::config::{Format, RunConfig};

/// A JSON object whose keys keep insertion order.
struct Ordered<T>(Vec<(String, T)>);

impl<T: Serialize> Serialize for Ordered<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Serialize)]
struct PolyOut<'a> {
    poly: &'a QPoly,
    eval: Ordered<String>,
}

#[derive(Serialize)]
struct TSeriesOut<'a> {
    config: &'a RunConfig,
    kind: &'a str,
    info: Ordered<String>,
    coeffs: Ordered<&'a QPoly>,
}

#[derive(Serialize)]
struct SeriesOut<'a> {
    config: &'a RunConfig,
    kind: &'a str,
    terms: Ordered<&'a QPoly>,
    eval: Ordered<Ordered<String>>,
}

#[derive(Serialize)]
struct ReportsOut<'a> {
    config: &'a RunConfig,
    passed: bool,
    reports: &'a [Report],
    skipped: Ordered<String>,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn evaluations(cfg: &RunConfig, p: &QPoly) -> Vec<(String, String)> {
    cfg.eval_points()
        .into_iter()
        .map(|(label, pt)| (label, p.eval(&pt).to_string()))
        .collect()
}

fn text_line(cfg: &RunConfig, key: &str, p: &QPoly) -> String {
    let mut s = if key.is_empty() {
        p.to_string()
    } else {
        format!("{key}\t{p}")
    };
    for (label, v) in evaluations(cfg, p) {
        s.push_str(&format!("\t[{label}: {v}]"));
    }
    s
}

fn tsv_row(key: &[String], p: &QPoly) -> String {
    let mut cells: Vec<String> = key.to_vec();
    cells.extend(p.coeffs().iter().map(ToString::to_string));
    cells.join("\t")
}

/// A single polynomial. JSON is the bare `{"var":"u","coeffs":[...]}`
/// unless evaluation points were requested.
pub fn poly(cfg: &RunConfig, p: &QPoly) -> String {
    match cfg.format {
        Format::Text => text_line(cfg, "", p),
        Format::Tsv => tsv_row(&[], p),
        Format::Json if cfg.eval.is_empty() => to_json(p),
        Format::Json => to_json(&PolyOut {
            poly: p,
            eval: Ordered(evaluations(cfg, p)),
        }),
    }
}

/// A truncated `t`-series, one row per degree.
pub fn tseries(cfg: &RunConfig, kind: &str, s: &TSeries, extra: &[(&str, String)]) -> String {
    match cfg.format {
        Format::Text => s
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| text_line(cfg, &format!("t^{k}"), c))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Tsv => s
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| tsv_row(&[k.to_string()], c))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let coeffs: Vec<(String, &QPoly)> =
                s.coeffs().iter().enumerate().map(|(k, c)| (k.to_string(), c)).collect();
            let extra = Ordered(extra.iter().map(|(k, v)| (k.to_string(), v.clone())).collect());
            to_json(&TSeriesOut {
                config: cfg,
                kind,
                info: extra,
                coeffs: Ordered(coeffs),
            })
        }
    }
}

/// A lattice series in grid order; zero coefficients are omitted.
pub fn series(cfg: &RunConfig, kind: &str, s: &LatticeSeries) -> String {
    let terms: Vec<(String, &QPoly)> = s.terms().map(|(g, p)| (g.to_string(), p)).collect();
    match cfg.format {
        Format::Text => terms
            .iter()
            .map(|(g, p)| text_line(cfg, g, p))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Tsv => s
            .terms()
            .map(|(g, p)| {
                let key: Vec<String> = g.0.iter().map(ToString::to_string).collect();
                tsv_row(&key, p)
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let evals: Vec<(String, Ordered<String>)> = cfg
                .eval_points()
                .into_iter()
                .map(|(label, pt)| {
                    let vals = terms.iter().map(|(g, p)| (g.clone(), p.eval(&pt).to_string())).collect();
                    (label, Ordered(vals))
                })
                .collect();
            to_json(&SeriesOut {
                config: cfg,
                kind,
                terms: Ordered(terms),
                eval: Ordered(evals),
            })
        }
    }
}

/// Verification reports, plus any ids that were skipped with a reason.
pub fn reports(cfg: &RunConfig, reports: &[Report], skipped: &[(String, String)]) -> String {
    match cfg.format {
        Format::Text => {
            let mut lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
            lines.extend(skipped.iter().map(|(id, why)| format!("SKIP {id} ({why})")));
            lines.join("\n")
        }
        Format::Tsv => {
            let mut lines = vec!["id\tstatus\tcomparisons\tfirst_failure".to_string()];
            for r in reports {
                let failure = r
                    .first_failure()
                    .map(|(name, m)| format!("{name} at {}: {} != {}", m.at, m.lhs, m.rhs))
                    .unwrap_or_default();
                let status = if r.passed() { "PASS" } else { "FAIL" };
                lines.push(format!("{}\t{status}\t{}\t{failure}", r.id, r.compared()));
            }
            for (id, why) in skipped {
                lines.push(format!("{id}\tSKIP\t0\t{why}"));
            }
            lines.join("\n")
        }
        Format::Json => {
            to_json(&ReportsOut {
                config: cfg,
                passed: reports.iter().all(Report::passed),
                reports,
                skipped: Ordered(skipped.to_vec()),
            })
        }
    }
}
