//! Run reports shared by the command-line front end and the tests.
//!
//! JSON layout, keys in this order:
//!
//! ```text
//! { "command": str, "inputs": object, "inputs_digest": str,
//!   "verdicts": [ { "name": str, "passed": bool, "data": any } ],
//!   "findings": [ { "id": str, "location": str, "detail": str, "max_deviation"?: num } ],
//!   "timings"?: [ { "stage": str, "seconds": num } ] }
//! ```
//!
//! `timings` is present only when requested, so reports without it are
//! byte-identical across runs with the same inputs.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::findings::Finding;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub data: Value,
}

impl Verdict {
    pub fn new(name: impl Into<String>, passed: bool, data: impl Serialize) -> Self {
        Verdict {
            name: name.into(),
            passed,
            data: serde_json::to_value(data).expect("report data serializes"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timing {
    pub stage: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub inputs_digest: String,
    pub verdicts: Vec<Verdict>,
    pub findings: Vec<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl RunReport {
    pub fn new(
        command: impl Into<String>,
        inputs: Value,
        inputs_digest: impl Into<String>,
    ) -> Self {
        RunReport {
            command: command.into(),
            inputs,
            inputs_digest: inputs_digest.into(),
            verdicts: Vec::new(),
            findings: Vec::new(),
            timings: None,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    /// 0 when every verdict passed and nothing was found, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() && self.findings.is_empty() {
            0
        } else {
            1
        }
    }
}

pub fn emit_report(r: &RunReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Text => emit_text(r),
    }
}

fn emit_text(r: &RunReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "command: {}", r.command);
    let _ = writeln!(s, "inputs: {}", r.inputs);
    let _ = writeln!(s, "inputs_digest: {}", r.inputs_digest);
    if r.verdicts.is_empty() {
        s.push_str("verdicts: []\n");
    } else {
        s.push_str("verdicts:\n");
        for v in &r.verdicts {
            let _ = writeln!(
                s,
                "  - {} [{}]",
                v.name,
                if v.passed { "pass" } else { "FAIL" }
            );
            if !v.data.is_null() {
                let _ = writeln!(s, "    {}", v.data);
            }
        }
    }
    if r.findings.is_empty() {
        s.push_str("findings: []\n");
    } else {
        s.push_str("findings:\n");
        for f in &r.findings {
            let _ = writeln!(s, "  - id: {}", f.id);
            let _ = writeln!(s, "    location: {}", f.location);
            let _ = writeln!(s, "    detail: {}", f.detail);
            if let Some(d) = f.max_deviation {
                let _ = writeln!(s, "    max_deviation: {d:e}");
            }
        }
    }
    if let Some(ts) = &r.timings {
        s.push_str("timings:\n");
        for t in ts {
            let _ = writeln!(s, "  - {}: {:.3}s", t.stage, t.seconds);
        }
    }
    s
}
