//! The JSON report shared by every command. Field order is fixed by the
//! struct declarations; exact quantities are strings such as `"8/3"`.

use std::collections::BTreeMap;

use serde::Serialize;
use triharm::conditions::{TriharmonicReport, Verdict};
use triharm::geometry::{CurvatureSpectrum, SpaceForm};
use triharm::scalar::Rational;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct Space {
    pub n: usize,
    pub c: String,
}

impl Space {
    pub fn of(sf: &SpaceForm<Rational>) -> Self {
        Space {
            n: sf.n(),
            c: sf.c().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub value: String,
    pub multiplicity: usize,
}

pub fn entries(spec: &CurvatureSpectrum<Rational>) -> Vec<Entry> {
    spec.entries()
        .iter()
        .map(|(v, m)| Entry {
            value: v.to_string(),
            multiplicity: *m,
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Invariants {
    #[serde(rename = "nH")]
    pub n_h: String,
    #[serde(rename = "H2")]
    pub h2: String,
    #[serde(rename = "S")]
    pub s: String,
    #[serde(rename = "R")]
    pub r: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
    pub data: Option<serde_json::Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: None,
            data: None,
        }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn data(mut self, v: serde_json::Value) -> Self {
        self.data = Some(v);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub space: Option<Space>,
    pub family: Option<String>,
    pub params: BTreeMap<String, String>,
    pub spectrum: Vec<Entry>,
    pub invariants: Option<Invariants>,
    pub residual: Option<String>,
    pub verdict: Option<Verdict>,
    pub checks: Vec<Check>,
    pub corollary: Option<serde_json::Value>,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl RunReport {
    pub fn new(command: String) -> Self {
        RunReport {
            command,
            space: None,
            family: None,
            params: BTreeMap::new(),
            spectrum: Vec::new(),
            invariants: None,
            residual: None,
            verdict: None,
            checks: Vec::new(),
            corollary: None,
            version: VERSION,
            timing: None,
        }
    }

    pub fn set_classification(&mut self, rep: &TriharmonicReport<Rational>) {
        let inv = &rep.invariants;
        self.invariants = Some(Invariants {
            n_h: inv.n_h.to_string(),
            h2: inv.h2.to_string(),
            s: inv.s.to_string(),
            r: inv.r.to_string(),
        });
        self.residual = Some(rep.t1.to_string());
        self.verdict = Some(rep.verdict);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Plain-text rendering: one `key: value` line per populated field, then
    /// one line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &str| out.push_str(&format!("{k:<10} {v}\n"));
        line("command", &self.command);
        if let Some(sp) = &self.space {
            line("space", &format!("n = {}, c = {}", sp.n, sp.c));
        }
        if let Some(f) = &self.family {
            let ps: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            line("family", format!("{f} {}", ps.join(" ")).trim_end());
        }
        if !self.spectrum.is_empty() {
            let es: Vec<String> = self
                .spectrum
                .iter()
                .map(|e| format!("{} x{}", e.value, e.multiplicity))
                .collect();
            line("spectrum", &es.join(", "));
        }
        if let Some(inv) = &self.invariants {
            line("nH", &inv.n_h);
            line("H2", &inv.h2);
            line("S", &inv.s);
            line("R", &inv.r);
        }
        if let Some(r) = &self.residual {
            line("residual", r);
        }
        if let Some(v) = &self.verdict {
            line("verdict", &v.to_string());
        }
        if let Some(c) = &self.corollary {
            for key in ["t0", "a2", "h2_error", "residual"] {
                if let Some(v) = c.get(key).and_then(|v| v.as_str()) {
                    line(key, v);
                }
            }
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            match &c.detail {
                Some(d) => out.push_str(&format!("[{mark}] {} ({d})\n", c.name)),
                None => out.push_str(&format!("[{mark}] {}\n", c.name)),
            }
        }
        if let Some(t) = &self.timing {
            out.push_str(&format!("{:<10} {:.1} ms\n", "elapsed", t.elapsed_ms));
        }
        out
    }
}
