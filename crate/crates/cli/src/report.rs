use std::fmt::Write as _;
use std::path::PathBuf;

use relcenter::verify::Verdict;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

pub fn digests(sources: &[(PathBuf, Vec<u8>)]) -> Vec<InputDigest> {
    let mut out: Vec<InputDigest> = Vec::new();
    for (path, bytes) in sources {
        let path = path.display().to_string();
        if out.iter().any(|d| d.path == path) {
            continue;
        }
        out.push(InputDigest {
            path,
            sha256: hex::encode(Sha256::digest(bytes)),
        });
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub result: Value,
    pub verdicts: Vec<Verdict>,
    /// Human-readable body for the text format.
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for d in &self.inputs {
            let _ = writeln!(out, "input: {} sha256={}", d.path, d.sha256);
        }
        out.push('\n');
        out.push_str(&self.text);
        if !self.text.is_empty() && !self.text.ends_with('\n') {
            out.push('\n');
        }
        if !self.verdicts.is_empty() {
            out.push('\n');
            for v in &self.verdicts {
                let _ = write!(
                    out,
                    "{} {} [{}] ({})",
                    if v.pass { "PASS" } else { "FAIL" },
                    v.name,
                    v.subject,
                    v.anchor
                );
                if let Some(w) = &v.witness {
                    let _ = write!(out, " witness: {w}");
                }
                out.push('\n');
            }
            let failed = self.verdicts.iter().filter(|v| !v.pass).count();
            let _ = writeln!(out, "{} verdicts, {} failed", self.verdicts.len(), failed);
        }
        out
    }
}
