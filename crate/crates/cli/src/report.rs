//! JSON-lines reports. Every map is ordered, so identical runs emit
//! identical bytes.

use std::collections::BTreeMap;
use std::io::Write;

use regpow_core::io::{GraphRecord, IdealRecord};
use regpow_core::regularity::{CertificateRecord, Regularity};
use regpow_core::Field;
use serde::Serialize;
use serde_json::Value;

use crate::corpus::{CorpusItem, Subject};

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub index: usize,
    pub input: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gens: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    pub field: Field,
    pub quantities: BTreeMap<String, Value>,
    /// The asserted relation, in words.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub asserted: Option<String>,
    pub pass: bool,
    /// Two independent computations of the same quantity disagreed.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub mismatch: bool,
    /// Set when the item lies outside the suite's hypotheses.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    /// Extremal certificates per ideal, attached to failing lines.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub certificates: BTreeMap<String, Vec<CertificateRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl ExperimentReport {
    pub fn new(experiment: &str, item: &CorpusItem, s: Option<u32>, field: Field) -> Self {
        let (edges, gens) = match &item.subject {
            Subject::Graph(g) => (Some(GraphRecord::from_graph(g).edges), None),
            Subject::Ideal(i) => (None, Some(IdealRecord::from_ideal(i).gens)),
        };
        ExperimentReport {
            experiment: experiment.to_string(),
            index: item.index,
            input: item.descriptor.clone(),
            n: item.subject.n(),
            edges,
            gens,
            s,
            field,
            quantities: BTreeMap::new(),
            asserted: None,
            pass: true,
            mismatch: false,
            skipped: false,
            failures: Vec::new(),
            certificates: BTreeMap::new(),
            wall_ms: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.quantities.insert(key.to_string(), value);
    }

    /// Records a failed check; `pass` becomes false.
    pub fn fail(&mut self, msg: impl Into<String>) {
        self.pass = false;
        self.failures.push(msg.into());
    }

    /// Records a disagreement between independent methods.
    pub fn mismatch(&mut self, msg: impl Into<String>) {
        self.mismatch = true;
        self.fail(msg);
    }

    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }

    pub fn skip(mut self, reason: &str) -> Self {
        self.skipped = true;
        self.set("skip_reason", reason);
        self
    }

    pub fn attach(&mut self, name: &str, reg: &Regularity) {
        let certs = reg.certificates.iter().map(|c| c.to_record()).collect();
        self.certificates.insert(name.to_string(), certs);
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub experiment: String,
    pub summary: bool,
    pub field: String,
    pub params: BTreeMap<String, Value>,
    pub total: usize,
    pub checked: usize,
    pub skipped: usize,
    pub passed: usize,
    pub failed: usize,
    pub mismatches: usize,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub tallies: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl Summary {
    pub fn tally(experiment: &str, field: Field, params: BTreeMap<String, Value>, reports: &[ExperimentReport]) -> Self {
        let checked: Vec<_> = reports.iter().filter(|r| !r.skipped).collect();
        Summary {
            experiment: experiment.to_string(),
            summary: true,
            field: field.to_string(),
            params,
            total: reports.len(),
            checked: checked.len(),
            skipped: reports.len() - checked.len(),
            passed: checked.iter().filter(|r| r.pass).count(),
            failed: checked.iter().filter(|r| !r.pass).count(),
            mismatches: checked.iter().filter(|r| r.mismatch).count(),
            tallies: BTreeMap::new(),
            wall_ms: None,
        }
    }
}

/// Writes one JSON object per line.
pub fn write_lines<W: Write, T: Serialize>(out: &mut W, items: &[T]) -> std::io::Result<()> {
    for item in items {
        serde_json::to_writer(&mut *out, item)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
