//! Verdicts of the exhaustive checkers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Number of failures kept verbatim; later ones are only counted.
const KEPT_FAILURES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// Which law or diagram failed.
    pub diagram: String,
    /// The instance it failed on.
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub checked: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    /// Failure count per diagram.
    pub by_diagram: BTreeMap<String, u64>,
    /// Conditions named but not checked.
    #[serde(default)]
    pub unchecked: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            by_diagram: BTreeMap::new(),
            unchecked: Vec::new(),
        }
    }

    /// Records one check; `witness` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, diagram: &str, witness: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.fail(diagram, witness());
        }
        ok
    }

    pub fn fail(&mut self, diagram: &str, witness: String) {
        self.record(diagram.to_string(), witness, 1);
    }

    /// Keeps the first `KEPT_FAILURES` witnesses and the first witness of
    /// every diagram.
    fn record(&mut self, diagram: String, witness: String, count: u64) {
        self.failure_count += count;
        let seen = self.by_diagram.get(&diagram).copied().unwrap_or(0);
        if self.failures.len() < KEPT_FAILURES || seen == 0 {
            self.failures.push(Failure { diagram: diagram.clone(), witness });
        }
        self.by_diagram.insert(diagram, seen + count);
    }

    pub fn note_unchecked(&mut self, condition: &str) {
        self.unchecked.push(condition.to_string());
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.unchecked.extend(other.unchecked.iter().map(|u| format!("{}: {u}", other.name)));
        let mut counts = other.by_diagram;
        for f in other.failures {
            let n = counts.remove(&f.diagram).unwrap_or(0);
            let diagram = format!("{}: {}", other.name, f.diagram);
            if n > 0 {
                self.record(diagram, f.witness, n);
            } else if self.failures.len() < KEPT_FAILURES {
                self.failures.push(Failure { diagram, witness: f.witness });
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn failed_diagrams(&self) -> Vec<&str> {
        self.by_diagram.keys().map(String::as_str).collect()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({} checks, {} failures)", self.name, self.checked, self.failure_count)?;
        for fl in &self.failures {
            write!(f, "\n  {}: {}", fl.diagram, fl.witness)?;
        }
        for u in &self.unchecked {
            write!(f, "\n  unchecked: {u}")?;
        }
        Ok(())
    }
}
