//! Machine-readable verification reports: named checks with computed and
//! expected values, rendered as text, JSON or CSV. Outputs are
//! deterministic; the timestamp is optional.

use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    /// Stable identifier of the verified statement, for traceability.
    pub anchor: String,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub command: String,
    pub params: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp_unix: Option<u64>,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl VerificationReport {
    pub fn new(command: &str, params: &str, with_timestamp: bool) -> Self {
        let timestamp_unix = if with_timestamp {
            Some(
                std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
            )
        } else {
            None
        };
        VerificationReport {
            schema: 1,
            command: command.to_string(),
            params: params.to_string(),
            timestamp_unix,
            checks: vec![],
            overall: Status::Pass,
        }
    }

    pub fn record<C: ToString, E: ToString>(
        &mut self,
        name: &str,
        anchor: &str,
        pass: bool,
        computed: C,
        expected: E,
        started: Instant,
    ) {
        let status = if pass { Status::Pass } else { Status::Fail };
        if status == Status::Fail {
            self.overall = Status::Fail;
        }
        self.checks.push(Check {
            name: name.to_string(),
            status,
            computed: computed.to_string(),
            expected: expected.to_string(),
            anchor: anchor.to_string(),
            elapsed_ms: started.elapsed().as_millis(),
        });
    }

    pub fn skip(&mut self, name: &str, anchor: &str, reason: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            status: Status::Skipped,
            computed: String::new(),
            expected: reason.to_string(),
            anchor: anchor.to_string(),
            elapsed_ms: 0,
        });
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {} {}\n", self.command, self.params));
        if let Some(ts) = self.timestamp_unix {
            out.push_str(&format!("# timestamp_unix: {ts}\n"));
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!(
                "{tag}  {:40} computed={} expected={} [{}] ({} ms)\n",
                c.name, c.computed, c.expected, c.anchor, c.elapsed_ms
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            match self.overall {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            }
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,status,computed,expected,anchor,elapsed_ms\n");
        for c in &self.checks {
            let esc = |s: &str| {
                if s.contains(',') || s.contains('"') {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s.to_string()
                }
            };
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                esc(&c.name),
                match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skipped => "skipped",
                },
                esc(&c.computed),
                esc(&c.expected),
                esc(&c.anchor),
                c.elapsed_ms
            ));
        }
        out
    }
}
