//! The structured output record emitted on stdout: text rendering for
//! humans, a single JSON document for machines. The machine form
//! round-trips — groups parsed back from it equal the in-memory values.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use gradedk::{AbelianGroup, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedGroup {
    pub name: String,
    pub free_rank: usize,
    /// Decimal strings so torsion coefficients of any size survive JSON.
    pub invariant_factors: Vec<String>,
    pub rendered: String,
}

impl NamedGroup {
    pub fn new(name: &str, group: &AbelianGroup) -> NamedGroup {
        NamedGroup {
            name: name.to_string(),
            free_rank: group.free_rank(),
            invariant_factors: group
                .invariant_factors()
                .iter()
                .map(BigInt::to_string)
                .collect(),
            rendered: group.to_string(),
        }
    }

    pub fn to_group(&self) -> AbelianGroup {
        AbelianGroup::new(
            self.free_rank,
            self.invariant_factors
                .iter()
                .map(|s| BigInt::from_str(s).expect("invariant factor is a decimal integer"))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedMatrix {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub row_labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub col_labels: Option<Vec<String>>,
    pub entries: Vec<Vec<String>>,
}

impl NamedMatrix {
    pub fn new(name: &str, m: &IntMatrix) -> NamedMatrix {
        NamedMatrix {
            name: name.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            row_labels: m.row_labels().map(<[String]>::to_vec),
            col_labels: m.col_labels().map(<[String]>::to_vec),
            entries: (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedBasis {
    pub name: String,
    /// One inner vector per basis element, entries as decimal strings.
    pub vectors: Vec<Vec<String>>,
}

impl NamedBasis {
    pub fn new(name: &str, basis: &[Vec<BigInt>]) -> NamedBasis {
        NamedBasis {
            name: name.to_string(),
            vectors: basis
                .iter()
                .map(|v| v.iter().map(BigInt::to_string).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

impl From<gradedk::Check> for CheckRecord {
    fn from(c: gradedk::Check) -> CheckRecord {
        CheckRecord {
            name: c.name,
            pass: c.pass,
            detail: c.detail,
        }
    }
}

/// Rank and diagonal of a Smith normal form, for the `snf` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfSummary {
    pub rank: usize,
    pub diagonal: Vec<String>,
}

/// Everything one invocation reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    /// `sha256:` digest of the canonicalized input document; whitespace and
    /// key order in the source cannot change it.
    pub input_digest: String,
    pub groups: Vec<NamedGroup>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub snf: Option<SnfSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub matrices: Vec<NamedMatrix>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub kernel_bases: Vec<NamedBasis>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub checks: Vec<CheckRecord>,
}

impl OutputRecord {
    pub fn new(command: &str, input_digest: String) -> OutputRecord {
        OutputRecord {
            command: command.to_string(),
            input_digest,
            groups: Vec::new(),
            snf: None,
            matrices: Vec::new(),
            kernel_bases: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string(self).expect("record serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input: {}\n", self.input_digest));
        if let Some(snf) = &self.snf {
            out.push_str(&format!("rank = {}\n", snf.rank));
            out.push_str(&format!("diagonal = ({})\n", snf.diagonal.join(", ")));
        }
        for g in &self.groups {
            out.push_str(&format!("{} = {}\n", g.name, g.rendered));
        }
        for m in &self.matrices {
            out.push_str(&format!("{} ({}x{}):\n", m.name, m.rows, m.cols));
            if m.rows == 0 || m.cols == 0 {
                out.push_str("  (empty)\n");
            }
            for row in &m.entries {
                out.push_str(&format!("  [{}]\n", row.join(" ")));
            }
        }
        for b in &self.kernel_bases {
            if b.vectors.is_empty() {
                out.push_str(&format!("{}: (empty)\n", b.name));
            } else {
                for (i, v) in b.vectors.iter().enumerate() {
                    out.push_str(&format!("{}[{}] = ({})\n", b.name, i, v.join(", ")));
                }
            }
        }
        for c in &self.checks {
            if c.pass {
                out.push_str(&format!("check {}: pass\n", c.name));
            } else {
                out.push_str(&format!("check {}: FAIL ({})\n", c.name, c.detail));
            }
        }
        if !self.checks.is_empty() {
            out.push_str(&format!(
                "overall: {}\n",
                if self.all_checks_pass() {
                    "pass"
                } else {
                    "FAIL"
                }
            ));
        }
        out
    }
}

/// `sha256:` + hex digest of a canonical document serialization.
pub fn digest(canonical: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    format!("sha256:{}", hex::encode(hasher.finalize()))
}
