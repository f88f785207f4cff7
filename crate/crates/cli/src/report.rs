//! Run reports: per-suite check lines, markdown rendering, JSON sidecar.
//!
//! The rendered report is a pure function of (tool version, selection): wall
//! times are tracked for the progress stream on stderr but never enter the
//! markdown or the JSON, so repeated runs are byte-identical.

use serde::Serialize;

use crate::suites::SuiteSelection;

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub algebra: String,
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool_version: String,
    pub selection: SuiteSelection,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed())
    }

    pub fn failures(&self) -> usize {
        self.suites
            .iter()
            .flat_map(|s| &s.checks)
            .filter(|c| !c.pass)
            .count()
    }

    /// Deterministic markdown rendering.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("# octonion verification report\n\n");
        out.push_str(&format!("tool version: {}\n\n", self.tool_version));
        out.push_str(&format!(
            "selection: algebras={:?} suites={:?} seed={} trials={} mode_bound={}\n\n",
            self.selection
                .algebras
                .iter()
                .map(|k| k.name())
                .collect::<Vec<_>>(),
            self.selection
                .suites
                .iter()
                .map(|s| s.name())
                .collect::<Vec<_>>(),
            self.selection.seed,
            self.selection.trials,
            self.selection.mode_bound,
        ));
        for suite in &self.suites {
            let verdict = if suite.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "## {} ({}) - {}\n\n",
                suite.name, suite.algebra, verdict
            ));
            for check in &suite.checks {
                let mark = if check.pass { 'x' } else { ' ' };
                out.push_str(&format!("- [{mark}] {}: {}\n", check.name, check.detail));
            }
            out.push('\n');
        }
        let total: usize = self.suites.iter().map(|s| s.checks.len()).sum();
        let failed = self.failures();
        out.push_str(&format!(
            "## summary\n\n{} checks, {} failed, {} suites, verdict {}\n",
            total,
            failed,
            self.suites.len(),
            if self.all_passed() { "PASS" } else { "FAIL" }
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}
