use serde::Serialize;
use serde_json::Value;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Info,
}

#[derive(Debug, Serialize)]
pub struct Finding {
    pub check: String,
    pub verdict: Verdict,
    pub details: String,
}

/// Everything a subcommand has to say. Printed as text or, with `--json`,
/// as a versioned document with scalars kept in their exact text form.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub findings: Vec<Finding>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub result: Value,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            schema: 1,
            command: command.into(),
            findings: Vec::new(),
            result: Value::Null,
            text: Vec::new(),
        }
    }

    pub fn check(&mut self, check: impl Into<String>, ok: bool, details: impl Into<String>) {
        self.findings.push(Finding {
            check: check.into(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            details: details.into(),
        });
    }

    pub fn info(&mut self, check: impl Into<String>, details: impl Into<String>) {
        self.findings.push(Finding {
            check: check.into(),
            verdict: Verdict::Info,
            details: details.into(),
        });
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.findings.iter().all(|f| f.verdict != Verdict::Fail)
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string_pretty(self).expect("report serializes");
        }
        let mut out = Vec::new();
        for f in &self.findings {
            let tag = match f.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Info => "info",
            };
            if f.details.is_empty() {
                out.push(format!("{}: {tag}", f.check));
            } else {
                out.push(format!("{}: {tag} ({})", f.check, f.details));
            }
        }
        out.extend(self.text.iter().cloned());
        out.join("\n")
    }
}
