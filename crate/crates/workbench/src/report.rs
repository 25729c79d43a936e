//! Versioned job reports and their text rendering.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::job::Job;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tallies {
    pub checks_run: usize,
    pub passed: usize,
    pub failed: usize,
    pub hypotheses_unmet: usize,
}

impl Tallies {
    pub fn absorb(&mut self, other: &Tallies) {
        self.checks_run += other.checks_run;
        self.passed += other.passed;
        self.failed += other.failed;
        self.hypotheses_unmet += other.hypotheses_unmet;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub report_version: u32,
    pub job: Job,
    pub verdict: String,
    pub result: Value,
    pub tallies: Tallies,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    /// Nonzero only when a theorem-backed assertion failed.
    pub fn exit_code(&self) -> i32 {
        if self.tallies.failed > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let t = &self.tallies;
        let _ = writeln!(out, "command: {}", self.job.command.name());
        if let Some(s) = &self.job.structure {
            let _ = writeln!(out, "structure: {s}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(
            out,
            "checks: {} run, {} passed, {} failed, {} hypotheses unmet",
            t.checks_run, t.passed, t.failed, t.hypotheses_unmet
        );
        match self.result.get("entries").and_then(Value::as_array) {
            Some(entries) => render_entries(&mut out, entries),
            None => {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&self.result).expect("json"));
            }
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time: {ms} ms");
        }
        out
    }
}

fn render_entries(out: &mut String, entries: &[Value]) {
    for entry in entries {
        let _ = writeln!(out, "{}", entry["name"].as_str().unwrap_or("?"));
        for suite in entry["suites"].as_array().into_iter().flatten() {
            let n = |k: &str| suite[k].as_u64().unwrap_or(0);
            let _ = write!(
                out,
                "  {:<20} {:>6} run {:>6} passed {:>3} failed {:>6} unmet",
                suite["suite"].as_str().unwrap_or("?"),
                n("checks_run"),
                n("passed"),
                n("failed"),
                n("hypotheses_unmet"),
            );
            if let Some(why) = suite.get("skipped").and_then(Value::as_str) {
                let _ = write!(out, "  skipped: {why}");
            }
            out.push('\n');
            for f in suite["failures"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "    FAIL {}", f.as_str().unwrap_or("?"));
            }
        }
    }
}
