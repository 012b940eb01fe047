//! JSON and CSV reports.
//!
//! The wall-clock timestamp lives only in `meta.timestamp`; everything else
//! is a function of the configuration.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::certifiers::Certificate;
use crate::config::{OutputFormat, RunConfig, RunMode};
use crate::error::Result;
use crate::suite::SuiteReport;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportMeta {
    pub timestamp: String,
    pub tool: String,
    pub version: String,
    pub mode: RunMode,
    pub master_seed: u64,
    pub trials: usize,
    pub tol_rel: f64,
    pub tol_abs: f64,
    pub suites_passed: usize,
    pub suites_failed: usize,
}

impl ReportMeta {
    pub fn new(config: &RunConfig, reports: &[SuiteReport]) -> Self {
        let passed = reports.iter().filter(|r| r.passed()).count();
        Self {
            timestamp: chrono::Utc::now().to_rfc3339(),
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            mode: config.mode,
            master_seed: config.master_seed,
            trials: config.trials,
            tol_rel: config.tol_rel,
            tol_abs: config.tol_abs,
            suites_passed: passed,
            suites_failed: reports.len() - passed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub meta: ReportMeta,
    pub suites: Vec<SuiteReport>,
}

pub fn to_json(meta: &ReportMeta, reports: &[SuiteReport]) -> Result<String> {
    #[derive(Serialize)]
    struct View<'a> {
        meta: &'a ReportMeta,
        suites: &'a [SuiteReport],
    }
    Ok(serde_json::to_string_pretty(&View { meta, suites: reports })?)
}

pub const CSV_HEADER: [&str; 11] =
    ["suiteId", "space", "trial", "theoremId", "mode", "lhs", "rhs", "gap", "holds", "witnessIndex", "params"];

fn flatten_params(c: &Certificate) -> String {
    c.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

/// One row per kept certificate; reports without kept certificates
/// contribute their violations.
pub fn write_csv<W: Write>(out: W, reports: &[SuiteReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in reports {
        let rows: Vec<(u64, &Certificate)> = if r.certificates.is_empty() {
            r.violations.iter().map(|v| (v.trial, &v.certificate)).collect()
        } else {
            r.certificates.iter().flat_map(|t| t.certificates.iter().map(move |c| (t.trial, c))).collect()
        };
        for (trial, c) in rows {
            w.write_record([
                r.suite_id.as_str().to_string(),
                r.space.clone(),
                trial.to_string(),
                c.theorem_id.clone(),
                c.mode.as_str().to_string(),
                c.lhs.to_string(),
                c.rhs.to_string(),
                c.gap.to_string(),
                c.holds.to_string(),
                c.witness_index.map(|i| i.to_string()).unwrap_or_default(),
                flatten_params(c),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn emit_report(meta: &ReportMeta, reports: &[SuiteReport], format: OutputFormat, path: &Path) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    match format {
        OutputFormat::Json => std::fs::write(path, to_json(meta, reports)?)?,
        OutputFormat::Csv => write_csv(std::fs::File::create(path)?, reports)?,
    }
    Ok(())
}

/// The JSON text with `meta.timestamp` blanked, for byte comparison of runs.
pub fn without_timestamp(json: &str) -> Result<String> {
    let mut v: serde_json::Value = serde_json::from_str(json)?;
    if let Some(m) = v.get_mut("meta").and_then(|m| m.as_object_mut()) {
        m.remove("timestamp");
    }
    Ok(serde_json::to_string(&v)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::RunConfig;
    use crate::rkhs::SpaceSpec;
    use crate::suite::run_certify;

    fn config() -> RunConfig {
        let mut c = RunConfig::new(&["young-scalar"]);
        c.spaces = vec![SpaceSpec::diagonal(2)];
        c.trials = 3;
        c
    }

    #[test]
    fn empty_report_is_valid_json() {
        let c = config();
        let json = to_json(&ReportMeta::new(&c, &[]), &[]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["suites"], serde_json::json!([]));
    }

    #[test]
    fn json_round_trip() {
        let mut c = config();
        c.keep_certificates = true;
        let reports = run_certify(&c).unwrap();
        let meta = ReportMeta::new(&c, &reports);
        let parsed: Report = serde_json::from_str(&to_json(&meta, &reports).unwrap()).unwrap();
        assert_eq!(parsed.suites, reports);
        assert_eq!(parsed.meta, meta);
    }

    #[test]
    fn csv_has_header_and_one_row_per_certificate() {
        let mut c = config();
        c.trials = 1;
        c.keep_certificates = true;
        let reports = run_certify(&c).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &reports).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.starts_with("suiteId,space,trial,theoremId"));
    }
}
