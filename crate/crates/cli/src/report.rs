//! Check records and the JSON report.

use serde_json::{json, Value};

pub const VERSION: &str = "pencil-git/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Recorded as seen, not judged.
    Observed,
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Observed => "observed",
            Status::Info => "info",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Value,
}

impl Check {
    pub fn new(id: &str, anchor: &str, ok: bool, witness: Value) -> Check {
        Check { id: id.into(), anchor: anchor.into(), status: if ok { Status::Pass } else { Status::Fail }, witness }
    }

    pub fn info(id: &str, witness: Value) -> Check {
        Check { id: id.into(), anchor: String::new(), status: Status::Info, witness }
    }

    pub fn observed(id: &str, anchor: &str, witness: Value) -> Check {
        Check { id: id.into(), anchor: anchor.into(), status: Status::Observed, witness }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub field: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, field: &str, mut checks: Vec<Check>) -> Report {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Report { command: command.into(), field: field.into(), checks }
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "version": VERSION,
            "command": self.command,
            "field": self.field,
            "checks": self.checks.iter().map(|c| json!({
                "id": c.id,
                "anchor": c.anchor,
                "status": c.status.as_str(),
                "witness": c.witness,
            })).collect::<Vec<_>>(),
            "status": if self.ok() { "pass" } else { "fail" },
        })
    }

    /// One line per check: `[status] id  anchor  witness`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = c.status.as_str().to_uppercase();
            if c.anchor.is_empty() {
                out.push_str(&format!("{tag:8} {}  {}\n", c.id, c.witness));
            } else {
                out.push_str(&format!("{tag:8} {}  [{}]  {}\n", c.id, c.anchor, c.witness));
            }
        }
        out.push_str(if self.ok() { "overall: pass\n" } else { "overall: fail\n" });
        out
    }
}
