use std::collections::BTreeMap;

use serde::Serialize;

use crate::blocks::BlockTable;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Artifacts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_table: Option<BlockTable>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub artifacts: Artifacts,
    /// wall-clock milliseconds per check, present only when requested
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<BTreeMap<String, u128>>,
}

impl Report {
    pub fn new(command: &str, params: BTreeMap<String, String>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            params,
            checks: Vec::new(),
            artifacts: Artifacts::default(),
            timing: None,
        }
    }

    pub fn pass(&mut self, name: &str, details: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Pass, details: details.into(), counterexample: None });
    }

    pub fn skip(&mut self, name: &str, details: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Skip, details: details.into(), counterexample: None });
    }

    /// A failed check always carries a counterexample.
    pub fn fail(&mut self, name: &str, details: impl Into<String>, counterexample: serde_json::Value) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Fail,
            details: details.into(),
            counterexample: Some(counterexample),
        });
    }

    pub fn record(&mut self, name: &str, ok: bool, details: impl Into<String>, counterexample: impl FnOnce() -> serde_json::Value) {
        if ok {
            self.pass(name, details);
        } else {
            self.fail(name, details, counterexample());
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} (schema {})\n", self.command, self.schema_version);
        for (k, v) in &self.params {
            out.push_str(&format!("  {} = {}\n", k, v));
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out.push_str(&format!("{} {}: {}\n", tag, c.name, c.details));
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("     counterexample: {}\n", ce));
            }
        }
        if let Some(t) = &self.artifacts.block_table {
            for part in crate::blocks::BlockTable::partition(t) {
                let ws: Vec<String> = part.iter().map(|w| w.to_string()).collect();
                out.push_str(&format!("  block {{{}}}\n", ws.join(", ")));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_and_json_shape() {
        let mut r = Report::new("demo", BTreeMap::from([("ell".to_string(), "4".to_string())]));
        r.pass("a", "fine");
        assert_eq!(r.exit_code(), 0);
        r.record("b", false, "broken", || serde_json::json!({"at": 3}));
        assert_eq!(r.exit_code(), 1);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["checks"][1]["status"], "fail");
        assert_eq!(v["checks"][1]["counterexample"]["at"], 3);
        assert!(v["checks"][0].get("counterexample").is_none());
        assert!(v.get("timing").is_none());
        assert!(r.to_text().contains("FAIL b: broken"));
    }
}
