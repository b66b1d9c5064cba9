//! Text and JSON rendering of reports and exact values.

use pointed_ext::fusion::{Failure, Report};
use pointed_ext::Cyc;
use serde_json::{json, Value};

use crate::file::encode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn round6(x: f64) -> f64 {
    let y = (x * 1e6).round() / 1e6;
    if y == 0.0 {
        0.0
    } else {
        y
    }
}

pub fn approx(c: &Cyc) -> (f64, f64) {
    let (re, im) = c.approx_complex();
    (round6(re), round6(im))
}

pub fn cyc_json(c: &Cyc) -> Value {
    let (re, im) = approx(c);
    json!({ "order": c.order(), "coeffs": encode(c), "approx": [re, im] })
}

pub fn cyc_text(c: &Cyc) -> String {
    let (re, im) = approx(c);
    format!("{}  [≈ {:.6}{:+.6}i]", c, re, im)
}

fn failure_json(f: &Failure) -> Value {
    json!({
        "check": f.check,
        "coords": f.coords,
        "detail": f.detail,
        "lhs": f.lhs.as_ref().map(cyc_json),
        "rhs": f.rhs.as_ref().map(cyc_json),
    })
}

pub fn report_json(r: &Report) -> Value {
    json!({
        "suite": r.suite,
        "status": if r.passed() { "pass" } else { "fail" },
        "checked": r.checked,
        "failures": r.failures.iter().map(failure_json).collect::<Vec<_>>(),
    })
}

pub fn report_text(r: &Report) -> String {
    let mut s = format!(
        "[{}] {}: {} checks, {} failures\n",
        if r.passed() { "PASS" } else { "FAIL" },
        r.suite,
        r.checked,
        r.failures.len()
    );
    for f in &r.failures {
        s.push_str(&format!("  {} {:?} {}\n", f.check, f.coords, f.detail));
        if let Some(l) = &f.lhs {
            s.push_str(&format!("    lhs = {}\n", cyc_text(l)));
        }
        if let Some(r) = &f.rhs {
            s.push_str(&format!("    rhs = {}\n", cyc_text(r)));
        }
    }
    s
}

/// A command's result: named sections and validation reports.
#[derive(Clone, Debug)]
pub struct Document {
    pub command: String,
    pub sections: Vec<(String, Value, String)>,
    pub reports: Vec<Report>,
}

impl Document {
    pub fn new(command: &str) -> Document {
        Document { command: command.to_string(), sections: Vec::new(), reports: Vec::new() }
    }

    pub fn section(&mut self, name: &str, value: Value, text: String) {
        self.sections.push((name.to_string(), value, text));
    }

    /// Adds a report with its failures sorted by coordinates.
    pub fn report(&mut self, mut r: Report) {
        r.sort();
        self.reports.push(r);
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn render(&self, format: Format) -> String {
        let status = if self.passed() { "pass" } else { "fail" };
        match format {
            Format::Json => {
                let mut sections = serde_json::Map::new();
                for (k, v, _) in &self.sections {
                    sections.insert(k.clone(), v.clone());
                }
                let doc = json!({
                    "command": self.command,
                    "status": status,
                    "sections": Value::Object(sections),
                    "reports": self.reports.iter().map(report_json).collect::<Vec<_>>(),
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = String::new();
                for (k, _, t) in &self.sections {
                    s.push_str(&format!("{}:\n", k));
                    for line in t.lines() {
                        s.push_str(&format!("  {}\n", line));
                    }
                }
                for r in &self.reports {
                    s.push_str(&report_text(r));
                }
                s.push_str(&format!("status: {}\n", status));
                s
            }
        }
    }
}

pub fn error_json(msg: &str) -> String {
    let mut s = serde_json::to_string_pretty(&json!({ "status": "error", "message": msg })).expect("serializable");
    s.push('\n');
    s
}
