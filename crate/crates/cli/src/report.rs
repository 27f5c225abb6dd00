//! On-disk JSON envelope for verification reports.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::Context;
use sections::VerificationReport;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// Top-level fields: `schema_version`, `seed`, `generator_name`,
/// `parameters`, `items`, `generated_at`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema_version: String,
    #[serde(flatten)]
    pub report: VerificationReport,
    /// RFC 3339 timestamp; the only field that differs between identical runs.
    pub generated_at: String,
}

impl ReportFile {
    pub fn new(report: VerificationReport) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_owned(),
            report,
            generated_at: chrono::Utc::now().to_rfc3339(),
        }
    }

    pub fn to_json(&self) -> anyhow::Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> anyhow::Result<Self> {
        let file: ReportFile = serde_json::from_str(text).context("parse report")?;
        anyhow::ensure!(
            file.schema_version == SCHEMA_VERSION,
            "unsupported report schema version {:?}",
            file.schema_version
        );
        Ok(file)
    }

    /// Writes to `path`, or to `stdout` when no path is given.
    pub fn emit(&self, path: Option<&Path>, stdout: &mut dyn Write) -> anyhow::Result<()> {
        let json = self.to_json()?;
        match path {
            Some(p) => fs::write(p, json + "\n").with_context(|| format!("write {}", p.display())),
            None => writeln!(stdout, "{json}").context("write report to stdout"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sections::verify::{Param, VerificationItem};

    fn sample_report() -> VerificationReport {
        let mut r = VerificationReport::new(u64::MAX - 3)
            .param("count", 200usize)
            .param("tol", 1e-9)
            .param("label", "f0");
        r.items.push(VerificationItem::equals("third", 1.0 / 3.0, 0.333_333_333_333_333_3, 1e-10));
        r.items.push(VerificationItem::margin("tiny", -1.234_567_890_123_456_7e-300, 1e-9).with_witness(0.1 + 0.2, 2.0 * std::f64::consts::PI / 3.0));
        r.items.push(VerificationItem::equals("integral", 2.0, 2.0, 0.0));
        r
    }

    #[test]
    fn round_trip_is_lossless() {
        let file = ReportFile::new(sample_report());
        let back = ReportFile::from_json(&file.to_json().unwrap()).unwrap();
        assert_eq!(back, file);
        for (a, b) in back.report.items.iter().zip(&file.report.items) {
            assert_eq!(a.computed.to_bits(), b.computed.to_bits());
        }
        assert_eq!(back.report.parameters["tol"], Param::Float(1e-9));
        assert_eq!(back.report.parameters["count"], Param::Int(200));
    }

    #[test]
    fn field_names_are_fixed() {
        let value: serde_json::Value = serde_json::from_str(&ReportFile::new(sample_report()).to_json().unwrap()).unwrap();
        let mut keys: Vec<_> = value.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["generated_at", "generator_name", "items", "parameters", "schema_version", "seed"]);
        let item = &value["items"][1];
        for key in ["name", "expected", "computed", "tolerance", "pass", "witness"] {
            assert!(item.get(key).is_some(), "{key}");
        }
        assert!(item["expected"].is_null());
        assert!(item["witness"]["r"].is_number() && item["witness"]["theta"].is_number());
    }

    #[test]
    fn rejects_other_schema_versions() {
        let mut file = ReportFile::new(sample_report());
        file.schema_version = "2".into();
        assert!(ReportFile::from_json(&file.to_json().unwrap()).is_err());
    }

    #[test]
    fn timestamp_is_rfc3339() {
        let file = ReportFile::new(sample_report());
        assert!(chrono::DateTime::parse_from_rfc3339(&file.generated_at).is_ok());
    }
}
