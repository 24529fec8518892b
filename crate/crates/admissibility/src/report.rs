//! Run reports: what was asked, a digest of the inputs, and what was found.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Version tag of the structured output.
pub const SCHEMA: &str = "admissibility-run/1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub name: String,
    pub text: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timing {
    pub name: String,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub verdicts: Vec<Entry>,
    pub witnesses: Vec<Entry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub timings: Vec<Timing>,
    #[serde(skip)]
    hasher: Sha256,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        let mut hasher = Sha256::new();
        for arg in &command {
            hasher.update(arg.as_bytes());
            hasher.update([0]);
        }
        RunReport {
            schema: SCHEMA,
            command,
            inputs_digest: String::new(),
            verdicts: Vec::new(),
            witnesses: Vec::new(),
            timings: Vec::new(),
            hasher,
        }
    }

    /// Folds the contents of an input file into the digest.
    pub fn add_input(&mut self, bytes: &[u8]) {
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
    }

    pub fn verdict(&mut self, name: &str, text: impl Into<String>, value: impl Serialize) {
        self.verdicts.push(entry(name, text, value));
    }

    pub fn witness(&mut self, name: &str, text: impl Into<String>, value: impl Serialize) {
        self.witnesses.push(entry(name, text, value));
    }

    pub fn timed<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.push(Timing { name: name.into(), millis: start.elapsed().as_millis() });
        out
    }

    pub fn finish(mut self, keep_timings: bool) -> Self {
        self.inputs_digest = format!("sha256:{:x}", self.hasher.clone().finalize());
        if !keep_timings {
            self.timings.clear();
        }
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command  {}", self.command.join(" "));
        let _ = writeln!(out, "inputs   {}", self.inputs_digest);
        for (kind, entries) in [("verdict", &self.verdicts), ("witness", &self.witnesses)] {
            for e in entries {
                let _ = writeln!(out, "{kind:<8} {:<26} {}", e.name, e.text);
            }
        }
        for t in &self.timings {
            let _ = writeln!(out, "time     {:<26} {} ms", t.name, t.millis);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values serialize") + "\n"
    }
}

fn entry(name: &str, text: impl Into<String>, value: impl Serialize) -> Entry {
    Entry { name: name.into(), text: text.into(), value: serde_json::to_value(value).unwrap_or(Value::Null) }
}
