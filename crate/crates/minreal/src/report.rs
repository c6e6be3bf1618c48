//! Check results and their json/tsv/text renderings.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Observed value on success, witness on failure.
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(id: &str, title: &str) -> Self {
        Self {
            id: id.into(),
            title: title.into(),
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records an engine error as a failed check.
    pub fn error(&mut self, name: impl Into<String>, err: impl std::fmt::Display) {
        self.check(name, false, format!("error: {err}"));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line: status, id, number of checks, first failure.
    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {} ({} checks): {}",
            self.id,
            self.checks.len(),
            self.title
        );
        if let Some(f) = self.failures().next() {
            let _ = write!(line, " | first failure: {} ({})", f.name, f.detail);
        }
        line
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn new(n: usize, seed: u64, suites: Vec<SuiteReport>) -> Self {
        let passed = suites.iter().all(|s| s.passed);
        Self {
            n,
            seed,
            passed,
            suites,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            Format::Tsv => {
                let mut out = String::from("suite\tcheck\tstatus\tdetail\n");
                for s in &self.suites {
                    for c in &s.checks {
                        let status = if c.passed { "pass" } else { "fail" };
                        let _ = writeln!(
                            out,
                            "{}\t{}\t{}\t{}",
                            s.id,
                            c.name,
                            status,
                            c.detail.replace('\t', " ")
                        );
                    }
                }
                out
            }
            Format::Text => {
                let mut out = String::new();
                for s in &self.suites {
                    let _ = writeln!(out, "{}", s.summary_line());
                    for c in s.failures() {
                        let _ = writeln!(out, "    {}: {}", c.name, c.detail);
                    }
                }
                let _ = writeln!(
                    out,
                    "{}",
                    if self.passed {
                        "all suites passed"
                    } else {
                        "some suites failed"
                    }
                );
                out
            }
        }
    }
}
