//! Check results and the machine-readable report format.
//!
//! A report is `{config, entries, summary}`. Every check is one entry with a
//! stable id, a descriptive anchor naming the relation it exercises, a
//! status and a free-form JSON payload. Exact scalars travel as strings.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(&self) -> bool {
        *self == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        *self == Status::Fail
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Status::Skipped(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Skipped(r) => write!(f, "skipped ({r})"),
            other => f.write_str(other.label()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    /// Where the first failure happened, e.g. `degree 3, entry (1, 0)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locus: Option<String>,
    #[serde(default)]
    pub data: Value,
}

impl Entry {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, status: Status) -> Self {
        Entry {
            id: id.into(),
            anchor: anchor.into(),
            status,
            locus: None,
            data: Value::Object(Map::new()),
        }
    }

    pub fn with_locus(mut self, locus: Option<String>) -> Self {
        self.locus = locus;
        self
    }

    pub fn with_data(mut self, data: Value) -> Self {
        self.data = data;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Wall-clock seconds; excluded from determinism comparisons.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_seconds: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: Value,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: Value, entries: Vec<Entry>) -> Self {
        let mut summary = Summary {
            total: entries.len(),
            ..Summary::default()
        };
        for e in &entries {
            match e.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skipped(_) => summary.skipped += 1,
            }
        }
        Report {
            config,
            entries,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Copy with timing fields removed.
    pub fn without_timing(&self) -> Self {
        let mut out = self.clone();
        out.summary.elapsed_seconds = None;
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `# config` and `# summary` comment lines, then one CSV row per entry
    /// with `data` flattened into a JSON string column.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        // config and summary ride along as comment lines so CSV carries the
        // same data as JSON
        let mut head = format!("# config {}\n", serde_json::to_string(&self.config).expect("json value serializes"));
        head.push_str(&format!("# summary {}\n", serde_json::to_string(&self.summary).expect("summary serializes")));
        let mut w = csv::Writer::from_writer(head.into_bytes());
        w.write_record(["id", "anchor", "status", "reason", "locus", "data"])?;
        for e in &self.entries {
            w.write_record([
                e.id.as_str(),
                e.anchor.as_str(),
                e.status.label(),
                e.status.reason().unwrap_or(""),
                e.locus.as_deref().unwrap_or(""),
                &serde_json::to_string(&e.data).expect("json value serializes"),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Rebuilds the whole report, comment lines included, from
    /// [`Report::to_csv`] output.
    pub fn from_csv(text: &str) -> Result<Report, String> {
        let header = |tag: &str| -> Result<Value, String> {
            let prefix = format!("# {tag} ");
            let line = text.lines().find_map(|l| l.strip_prefix(prefix.as_str())).ok_or(format!("missing {tag} line"))?;
            serde_json::from_str(line).map_err(|e| e.to_string())
        };
        let config = header("config")?;
        let summary: Summary = serde_json::from_value(header("summary")?).map_err(|e| e.to_string())?;
        let entries = Self::entries_from_csv(text).map_err(|e| e.to_string())?;
        Ok(Report { config, entries, summary })
    }

    /// Rebuilds the entries from [`Report::to_csv`] output.
    pub fn entries_from_csv(text: &str) -> Result<Vec<Entry>, csv::Error> {
        let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
        let mut out = Vec::new();
        for row in r.records() {
            let row = row?;
            let status = match &row[2] {
                "pass" => Status::Pass,
                "fail" => Status::Fail,
                _ => Status::Skipped(row[3].to_string()),
            };
            out.push(Entry {
                id: row[0].to_string(),
                anchor: row[1].to_string(),
                status,
                locus: (!row[4].is_empty()).then(|| row[4].to_string()),
                data: serde_json::from_str(&row[5]).unwrap_or(Value::Null),
            });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_roundtrip() {
        let entries = vec![
            Entry::new("a", "x", Status::Pass).with_data(json!({"k": 1, "s": "36/5"})),
            Entry::new("b", "y", Status::Fail).with_locus(Some("degree 2".into())),
            Entry::new("c", "z", Status::Skipped("resonant, \"quoted\"".into())),
        ];
        let report = Report::new(json!({}), entries.clone());
        let back = Report::entries_from_csv(&report.to_csv().unwrap()).unwrap();
        assert_eq!(back, entries);
        assert_eq!(report.summary.failed, 1);
        assert!(!report.all_passed());
    }

    #[test]
    fn status_json_shape() {
        assert_eq!(serde_json::to_string(&Status::Pass).unwrap(), "\"pass\"");
        assert_eq!(
            serde_json::to_string(&Status::Skipped("r".into())).unwrap(),
            "{\"skipped\":\"r\"}"
        );
    }
}
