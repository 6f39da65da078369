//! The result document and its two renderings.

use serde::{Deserialize, Serialize};
use thom_schur::SchurExpansion;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq, Default)]
pub struct TermDoc {
    pub partition: String,
    pub coeff: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq, Default)]
pub struct ReportDoc {
    pub check: String,
    pub status: String,
    pub detail: String,
}

/// One Euler table row.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq, Default)]
pub struct RowDoc {
    pub ideal: String,
    pub value: String,
    pub provenance: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq, Default)]
pub struct ResultDocument {
    pub command: String,
    pub algebra: Option<String>,
    pub n: Option<usize>,
    pub p: Option<usize>,
    pub l: Option<i64>,
    pub codim: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<String>,
    /// Schur terms, sorted by partition.
    pub terms: Vec<TermDoc>,
    /// The class in the requested basis, or the series.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub display: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<RowDoc>,
    pub report: Vec<ReportDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub provenance: Vec<String>,
}

pub fn schur_terms(e: &SchurExpansion) -> Vec<TermDoc> {
    e.coeffs.iter().map(|(l, c)| TermDoc { partition: l.to_string(), coeff: c.to_string() }).collect()
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(src: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(src)
    }

    pub fn failed_checks(&self) -> usize {
        self.report.iter().filter(|r| r.status != "pass").count()
    }

    /// The text rendering: the payload line(s), then report lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(d) = &self.display {
            out.push_str(d);
            out.push('\n');
        }
        for r in &self.rows {
            out.push_str(&format!("{} | {} | {}\n", r.ideal, r.value, r.provenance));
        }
        for r in &self.report {
            if r.detail.is_empty() {
                out.push_str(&format!("[{}] {}\n", r.status, r.check));
            } else {
                out.push_str(&format!("[{}] {}: {}\n", r.status, r.check, r.detail));
            }
        }
        out
    }
}
