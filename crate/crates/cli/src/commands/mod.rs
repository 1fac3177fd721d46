mod check;
mod corollary;
mod identities;
mod scan;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use triharm::Error;

use crate::args::{Cli, Command, Format};
use crate::report::{RunReport, Timing};

pub use scan::{sweep, SweepRow};

/// Why a command did not produce a passing result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Bad flags, parameters or ranges: exit code 2.
    Usage(String),
    /// A mathematical check did not hold: exit code 1.
    Math(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Math(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Math(m) => write!(f, "check failed: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CheckFailed(_)
            | Error::RootCount { .. }
            | Error::InexactDivision
            | Error::ZeroPolynomial
            | Error::MissingRule(_)
            | Error::RingMismatch => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// What a command produced: text for stdout and whether every check passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn render(mut report: RunReport, format: Format, started: Option<Instant>) -> Outcome {
    if let Some(t) = started {
        report.timing = Some(Timing {
            elapsed_ms: t.elapsed().as_secs_f64() * 1e3,
        });
    }
    let passed = report.all_passed();
    let stdout = match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Outcome { stdout, passed }
}

fn param_map(pairs: &[(String, String)]) -> Result<BTreeMap<String, String>, Failure> {
    let mut map = BTreeMap::new();
    for (k, v) in pairs {
        if map.insert(k.clone(), v.clone()).is_some() {
            return Err(Failure::Usage(format!("parameter `{k}` given twice")));
        }
    }
    Ok(map)
}

/// Runs a parsed command line. `echo` is recorded verbatim in the report.
pub fn run(cli: &Cli, echo: String) -> Result<Outcome, Failure> {
    let started = (!cli.no_timing).then(Instant::now);
    match &cli.command {
        Command::Check(a) => {
            let report = check::run(a, echo)?;
            Ok(render(report, a.format, started))
        }
        Command::Corollary(a) => {
            let report = corollary::run(a, echo)?;
            Ok(render(report, a.format, started))
        }
        Command::Identities(a) => {
            let report = identities::run(a, echo);
            Ok(render(report, a.format, started))
        }
        Command::Scan(a) => scan::run(a, echo),
    }
}
