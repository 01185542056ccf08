//! Inline integer-matrix documents for the `snf` subcommand.
//!
//! ```json
//! { "entries": [[2, 0], [0, 3]],
//!   "row_labels": ["a", "b"], "col_labels": ["x", "y"] }
//! ```
//!
//! Entries may be JSON integers or decimal strings (for values beyond the
//! JSON number range). Labels are optional. `rows`/`cols` are optional and
//! only needed to give an empty `entries` array a nonzero dimension.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Deserialize;

use gradedk::IntMatrix;

#[derive(Deserialize)]
#[serde(untagged)]
enum RawEntry {
    Int(i64),
    Text(String),
}

impl RawEntry {
    fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            RawEntry::Int(v) => Ok(BigInt::from(*v)),
            RawEntry::Text(s) => {
                BigInt::from_str(s.trim()).map_err(|_| format!("`{s}` is not an integer"))
            }
        }
    }
}

#[derive(Deserialize)]
struct RawMatrixDocument {
    entries: Vec<Vec<RawEntry>>,
    #[serde(default)]
    rows: Option<usize>,
    #[serde(default)]
    cols: Option<usize>,
    #[serde(default)]
    row_labels: Option<Vec<String>>,
    #[serde(default)]
    col_labels: Option<Vec<String>>,
}

pub fn parse_matrix_document(text: &str) -> Result<IntMatrix, String> {
    let raw: RawMatrixDocument =
        serde_json::from_str(text).map_err(|e| format!("malformed matrix document: {e}"))?;
    let rows = raw.rows.unwrap_or(raw.entries.len());
    if rows != raw.entries.len() && !raw.entries.is_empty() {
        return Err(format!(
            "declared rows = {rows} but entries has {} rows",
            raw.entries.len()
        ));
    }
    let implied_cols = raw.entries.first().map_or(0, Vec::len);
    let cols = raw.cols.unwrap_or(implied_cols);
    let mut m = IntMatrix::zero(rows, cols);
    for (r, row) in raw.entries.iter().enumerate() {
        if row.len() != cols {
            return Err(format!(
                "row {r} has {} entries, expected {cols}",
                row.len()
            ));
        }
        for (c, entry) in row.iter().enumerate() {
            m[(r, c)] = entry
                .to_bigint()
                .map_err(|e| format!("entry ({r},{c}): {e}"))?;
        }
    }
    match (raw.row_labels, raw.col_labels) {
        (None, None) => Ok(m),
        (row_labels, col_labels) => {
            let row_labels =
                row_labels.unwrap_or_else(|| (0..rows).map(|i| format!("r{i}")).collect());
            let col_labels =
                col_labels.unwrap_or_else(|| (0..cols).map(|i| format!("c{i}")).collect());
            if row_labels.len() != rows || col_labels.len() != cols {
                return Err("label count does not match matrix dimensions".to_string());
            }
            Ok(m.with_labels(row_labels, col_labels))
        }
    }
}

/// Canonical single-line serialization used for the input digest.
pub fn canonical_matrix_json(m: &IntMatrix) -> String {
    let entries: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect())
        .collect();
    let mut doc = serde_json::Map::new();
    doc.insert("rows".into(), m.rows().into());
    doc.insert("cols".into(), m.cols().into());
    doc.insert(
        "entries".into(),
        serde_json::to_value(entries).expect("string table serializes"),
    );
    if let Some(labels) = m.row_labels() {
        doc.insert(
            "row_labels".into(),
            serde_json::to_value(labels).expect("labels serialize"),
        );
    }
    if let Some(labels) = m.col_labels() {
        doc.insert(
            "col_labels".into(),
            serde_json::to_value(labels).expect("labels serialize"),
        );
    }
    serde_json::Value::Object(doc).to_string()
}
