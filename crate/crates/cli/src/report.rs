use std::fmt::Write as _;

use legvar_core::bryant::Status as CoreStatus;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// JSON layout version.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Sampled,
    Unknown,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Sampled => "SAMPLED",
            Status::Unknown => "UNKNOWN",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl From<CoreStatus> for Status {
    fn from(s: CoreStatus) -> Self {
        match s {
            CoreStatus::Pass => Status::Pass,
            CoreStatus::Fail => Status::Fail,
            CoreStatus::Sampled => Status::Sampled,
            CoreStatus::Unknown => Status::Unknown,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

/// A computed quantity shown alongside the checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Value {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub inputs_sha256: String,
    pub values: Vec<Value>,
    pub checks: Vec<CheckLine>,
    pub exit_code: i32,
}

/// SHA-256 of the parts with all whitespace removed, separated by NUL.
pub fn inputs_digest<S: AsRef<str>>(parts: &[S]) -> String {
    let mut h = Sha256::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            h.update([0u8]);
        }
        let stripped: String = p.as_ref().chars().filter(|c| !c.is_whitespace()).collect();
        h.update(stripped.as_bytes());
    }
    h.finalize().iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

impl Report {
    pub fn new<S: AsRef<str>>(command: impl Into<String>, inputs: &[S]) -> Self {
        Report {
            schema: SCHEMA,
            command: command.into(),
            inputs_sha256: inputs_digest(inputs),
            values: Vec::new(),
            checks: Vec::new(),
            exit_code: 0,
        }
    }

    pub fn value(&mut self, name: impl Into<String>, value: impl ToString) -> &mut Self {
        self.values.push(Value { name: name.into(), value: value.to_string() });
        self
    }

    pub fn check(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) -> &mut Self {
        self.checks.push(CheckLine { name: name.into(), status, detail: detail.into() });
        if status == Status::Fail {
            self.exit_code = 1;
        }
        self
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "inputs sha256: {}", self.inputs_sha256);
        for v in &self.values {
            if v.value.contains('\n') {
                let _ = writeln!(out, "  {}:", v.name);
                for l in v.value.lines() {
                    let _ = writeln!(out, "    {l}");
                }
            } else {
                let _ = writeln!(out, "  {} = {}", v.name, v.value);
            }
        }
        for c in &self.checks {
            let _ = write!(out, "{:<8} {}", c.status.label(), c.name);
            if !c.detail.is_empty() {
                let _ = write!(out, ": {}", c.detail);
            }
            out.push('\n');
        }
        let _ = writeln!(out, "exit code: {}", self.exit_code);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_ignores_whitespace() {
        assert_eq!(inputs_digest(&["F = x0^2 - x1*x2"]), inputs_digest(&["F=x0^2-x1*x2\n"]));
        assert_ne!(inputs_digest(&["ab", "c"]), inputs_digest(&["a", "bc"]));
        // Empty input hashes to the well-known empty digest.
        assert_eq!(inputs_digest::<&str>(&[]), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn exit_code_tracks_failures() {
        let mut r = Report::new("x", &["a"]);
        r.check("a", Status::Sampled, "").check("b", Status::Unknown, "");
        assert_eq!(r.exit_code, 0);
        r.check("c", Status::Fail, "nope");
        assert_eq!(r.exit_code, 1);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["checks"][2]["status"], "FAIL");
    }
}
