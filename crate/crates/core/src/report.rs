//! Structured verification records.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::faces::FaceId;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Context {
    pub arrangement_hash: String,
    pub apartment: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub description: String,
    pub faces: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polynomials: Vec<String>,
}

impl Counterexample {
    pub fn new(description: impl Into<String>, faces: Vec<FaceId>) -> Self {
        Counterexample { description: description.into(), faces: faces.iter().map(|f| f.0).collect(), polynomials: vec![] }
    }

    pub fn with_polynomials(mut self, polys: Vec<String>) -> Self {
        self.polynomials = polys;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Details {
    pub checked: u64,
    pub skipped: u64,
    pub counterexamples: Vec<Counterexample>,
    pub data: BTreeMap<String, String>,
}

impl Details {
    pub fn note(&mut self, key: &str, value: impl Into<String>) {
        self.data.insert(key.to_string(), value.into());
    }

    pub fn merge(&mut self, other: Details) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.counterexamples.extend(other.counterexamples);
        self.data.extend(other.data);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub check: String,
    pub context: Context,
    pub status: Status,
    pub details: Details,
}

impl ReportEntry {
    /// Fails if any counterexample was recorded, skipped if nothing was
    /// checked but something was skipped, passes otherwise.
    pub fn from_details(check: &str, details: Details) -> Self {
        let status = if !details.counterexamples.is_empty() {
            Status::Fail
        } else if details.checked == 0 && details.skipped > 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        ReportEntry { check: check.to_string(), context: Context::default(), status, details }
    }

    pub fn with_context(mut self, context: Context) -> Self {
        self.context = context;
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub entries: Vec<ReportEntry>,
}

impl Default for VerificationReport {
    fn default() -> Self {
        VerificationReport { schema: SCHEMA_VERSION, entries: Vec::new() }
    }
}

impl VerificationReport {
    pub fn push(&mut self, entry: ReportEntry) {
        self.entries.push(entry);
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(ReportEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }
}
