use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one check. Conjectures are never reported as `Pass`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ConjectureConsistent,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ConjectureConsistent => "conjecture-consistent",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    /// The statement or oracle pairing being checked.
    pub claim: String,
    pub status: Status,
    /// Parameters, orders and (on failure) the first mismatch.
    pub detail: String,
    /// Command that re-runs this check alone.
    pub reproducer: String,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    /// Sorts by id so that the report does not depend on scheduling.
    pub fn new(mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        VerificationReport { checks }
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// The report without timings, for determinism comparisons.
    pub fn canonical(&self) -> VerificationReport {
        VerificationReport {
            checks: self
                .checks
                .iter()
                .map(|c| CheckResult {
                    runtime_ms: 0,
                    ..c.clone()
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    /// `id,status,runtime_ms,detail` rows.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(vec![]);
        w.write_record(["id", "status", "runtime_ms", "detail"])
            .expect("in-memory write");
        for c in &self.checks {
            w.write_record([
                &c.id,
                &c.status.to_string(),
                &c.runtime_ms.to_string(),
                &c.detail,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{:<22} {:<34} {:>7} ms  {}",
                c.status, c.id, c.runtime_ms, c.detail
            )?;
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        write!(
            f,
            "{} checks: {} pass, {} conjecture-consistent, {} fail",
            self.checks.len(),
            count(Status::Pass),
            count(Status::ConjectureConsistent),
            count(Status::Fail)
        )
    }
}
