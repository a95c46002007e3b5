//! Line-delimited JSON persistence for verification results.
//!
//! Each line of a results file is one JSON record. Appending is
//! idempotent: a record whose key (claim, lhs, rhs, params) already
//! appears in the file is skipped. Loading tolerates corrupt lines,
//! reporting them by line number while returning every record that
//! parses.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

/// Version of the record layout written by this build.
pub const SCHEMA_VERSION: u32 = 1;

/// One persisted verification result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema: u32,
    /// Claim identifier the result belongs to.
    pub claim: String,
    /// Compact form (graph6) of the first graph of the instance, or empty.
    pub lhs: String,
    /// Compact form of the second graph, or empty.
    pub rhs: String,
    /// Instance parameters (k, r, choices, bounds, ...).
    pub params: BTreeMap<String, Value>,
    /// "pass", "fail", "skip", or "observed".
    pub outcome: String,
    /// Free-form evidence: certificates, witnesses, counts.
    pub payload: Value,
}

impl ResultRecord {
    /// Identity of the instance a record describes: claim, both graphs, and
    /// parameters. Appends deduplicate on this key, and re-runs reuse stored
    /// outcomes through it.
    pub fn key(&self) -> String {
        let params = serde_json::to_string(&self.params).expect("map serialization");
        format!("{}\u{1f}{}\u{1f}{}\u{1f}{}", self.claim, self.lhs, self.rhs, params)
    }
}

/// Result of loading a results file.
#[derive(Debug, Default)]
pub struct LoadOutcome {
    pub records: Vec<ResultRecord>,
    /// 1-based line numbers and parse errors for lines that are not valid
    /// records.
    pub corrupt_lines: Vec<(usize, String)>,
}

/// Reads all records from a file. A missing file loads as empty.
pub fn load_records(path: &Path) -> Result<LoadOutcome> {
    let mut outcome = LoadOutcome::default();
    let file = match std::fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(outcome),
        Err(e) => return Err(e.into()),
    };
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<ResultRecord>(&line) {
            Ok(rec) => outcome.records.push(rec),
            Err(e) => outcome.corrupt_lines.push((i + 1, e.to_string())),
        }
    }
    Ok(outcome)
}

/// Summary of an append operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AppendSummary {
    pub written: usize,
    pub skipped_existing: usize,
}

/// Appends records not already present, keyed by (claim, lhs, rhs,
/// params). Corrupt lines in the existing file are left untouched.
pub fn append_records(path: &Path, records: &[ResultRecord]) -> Result<AppendSummary> {
    let existing = load_records(path)?;
    let mut keys: BTreeSet<String> = existing.records.iter().map(ResultRecord::key).collect();
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut summary = AppendSummary { written: 0, skipped_existing: 0 };
    for rec in records {
        if keys.insert(rec.key()) {
            let line = serde_json::to_string(rec)?;
            writeln!(file, "{line}")?;
            summary.written += 1;
        } else {
            summary.skipped_existing += 1;
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn record(claim: &str, lhs: &str, outcome: &str) -> ResultRecord {
        let mut params = BTreeMap::new();
        params.insert("k".to_string(), json!(3));
        ResultRecord {
            schema: SCHEMA_VERSION,
            claim: claim.into(),
            lhs: lhs.into(),
            rhs: String::new(),
            params,
            outcome: outcome.into(),
            payload: json!({"aw": 4}),
        }
    }

    #[test]
    fn appends_are_idempotent() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.jsonl");
        let records = vec![record("A", "Bw", "pass"), record("B", "Bg", "pass")];
        let first = append_records(&path, &records).unwrap();
        assert_eq!(first, AppendSummary { written: 2, skipped_existing: 0 });
        let again = append_records(&path, &records).unwrap();
        assert_eq!(again, AppendSummary { written: 0, skipped_existing: 2 });
        let loaded = load_records(&path).unwrap();
        assert_eq!(loaded.records, records);
        assert!(loaded.corrupt_lines.is_empty());
    }

    #[test]
    fn distinct_params_are_distinct_records() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.jsonl");
        let mut a = record("A", "Bw", "pass");
        let mut b = a.clone();
        b.params.insert("r".to_string(), json!(4));
        append_records(&path, &[a.clone()]).unwrap();
        let s = append_records(&path, &[b.clone()]).unwrap();
        assert_eq!(s.written, 1);
        // A changed outcome does not duplicate the key.
        a.outcome = "fail".into();
        let s = append_records(&path, &[a]).unwrap();
        assert_eq!(s.skipped_existing, 1);
        assert_eq!(load_records(&path).unwrap().records.len(), 2);
        drop(b);
    }

    #[test]
    fn corrupt_lines_are_reported_and_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.jsonl");
        append_records(&path, &[record("A", "Bw", "pass")]).unwrap();
        std::fs::write(
            &path,
            format!(
                "{}\nnot json at all\n{}\n",
                serde_json::to_string(&record("A", "Bw", "pass")).unwrap(),
                serde_json::to_string(&record("B", "Bg", "fail")).unwrap()
            ),
        )
        .unwrap();
        let loaded = load_records(&path).unwrap();
        assert_eq!(loaded.records.len(), 2);
        assert_eq!(loaded.corrupt_lines.len(), 1);
        assert_eq!(loaded.corrupt_lines[0].0, 2);
        // Appending around the corrupt line stays idempotent.
        let s = append_records(&path, &[record("B", "Bg", "fail")]).unwrap();
        assert_eq!(s, AppendSummary { written: 0, skipped_existing: 1 });
    }

    #[test]
    fn missing_files_load_empty() {
        let dir = tempfile::tempdir().unwrap();
        let outcome = load_records(&dir.path().join("absent.jsonl")).unwrap();
        assert!(outcome.records.is_empty());
    }
}
