use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use triharm::catalog::{build, FamilyTag};
use triharm::conditions::{classify, Verdict};
use triharm::scalar::{parse_rational, Rational, Scalar};

use super::{check::instance, param_map, Failure, Outcome};
use crate::args::{FamilyArgs, ScanArgs, SweepFormat};
use crate::report::{Space, VERSION};

/// One sample of a sweep. Exact values are rendered as strings.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub param: String,
    #[serde(rename = "H2")]
    pub h2: String,
    #[serde(rename = "S")]
    pub s: String,
    #[serde(rename = "R")]
    pub r: String,
    pub residual: String,
    pub verdict: Verdict,
}

pub const CSV_HEADER: &str = "param,H2,S,R,residual,verdict";

impl SweepRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.param, self.h2, self.s, self.r, self.residual, self.verdict
        )
    }
}

#[derive(Serialize)]
struct SweepFile<'a> {
    command: &'a str,
    space: Space,
    family: String,
    params: BTreeMap<String, String>,
    key: &'a str,
    rows: &'a [SweepRow],
    version: &'static str,
}

/// Parses `lo:hi:steps` into `steps` equally spaced exact samples.
fn samples(key: &str, spec: &str) -> Result<Vec<Rational>, Failure> {
    let usage = |m: String| Failure::Usage(format!("--param-range {key}={spec}: {m}"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, steps] = parts[..] else {
        return Err(usage("expected LO:HI:STEPS".to_string()));
    };
    let lo = parse_rational(lo).ok_or_else(|| usage(format!("malformed value `{lo}`")))?;
    let hi = parse_rational(hi).ok_or_else(|| usage(format!("malformed value `{hi}`")))?;
    let steps: usize = steps
        .parse()
        .map_err(|_| usage(format!("malformed step count `{steps}`")))?;
    if steps < 2 {
        return Err(usage("need at least 2 steps".to_string()));
    }
    if lo >= hi {
        return Err(usage("need LO < HI".to_string()));
    }
    let width = (hi - lo.clone()) / Rational::from_usize(steps - 1);
    let out: Vec<Rational> = (0..steps)
        .map(|i| lo.clone() + width.clone() * Rational::from_usize(i))
        .collect();
    if FamilyTag::is_integer_key(key) {
        if let Some(bad) = out.iter().find(|x| !x.is_integer()) {
            return Err(usage(format!(
                "`{key}` takes integers, sample {bad} is not"
            )));
        }
    }
    Ok(out)
}

fn evaluate(base: &FamilyArgs, key: &str, x: &Rational) -> Result<SweepRow, Failure> {
    let mut args = FamilyArgs {
        curvature: base.curvature,
        n: base.n,
        family: base.family,
        params: base.params.clone(),
    };
    if key == "n" {
        args.n = u64::try_from(x.to_integer())
            .map_err(|_| Failure::Usage(format!("n = {x} is not a dimension")))?;
    } else {
        args.params.push((key.to_string(), x.to_string()));
    }
    let (sf, fam) = instance(&args)?;
    let spec = build(&sf, &fam)?;
    let rep = classify(&sf, &spec)?;
    let inv = &rep.invariants;
    Ok(SweepRow {
        param: x.to_string(),
        h2: inv.h2.to_string(),
        s: inv.s.to_string(),
        r: inv.r.to_string(),
        residual: rep.t1.to_string(),
        verdict: rep.verdict,
    })
}

/// Evaluates every sample of `key` over `range` (`lo:hi:steps`). Samples run
/// in parallel; rows come back in parameter order.
pub fn sweep(base: &FamilyArgs, key: &str, range: &str) -> Result<Vec<SweepRow>, Failure> {
    if key != "n" && !base.family.keys().contains(&key) {
        return Err(Failure::Usage(format!(
            "family {} has no parameter `{key}`",
            base.family
        )));
    }
    if param_map(&base.params)?.contains_key(key) {
        return Err(Failure::Usage(format!("`{key}` is both swept and fixed")));
    }
    let xs = samples(key, range)?;
    let rows: Vec<Result<SweepRow, Failure>> =
        xs.par_iter().map(|x| evaluate(base, key, x)).collect();
    rows.into_iter().collect()
}

pub(crate) fn run(args: &ScanArgs, echo: String) -> Result<Outcome, Failure> {
    let (key, range) = (&args.range.0, &args.range.1);
    let rows = sweep(&args.family, key, range)?;
    let body = match args.out {
        SweepFormat::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for row in &rows {
                s.push_str(&row.to_csv());
                s.push('\n');
            }
            s
        }
        SweepFormat::Json => {
            let file = SweepFile {
                command: &echo,
                space: Space {
                    n: args.family.n as usize,
                    c: args.family.curvature.to_string(),
                },
                family: args.family.family.to_string(),
                params: param_map(&args.family.params)?,
                key,
                rows: &rows,
                version: VERSION,
            };
            let mut s = serde_json::to_string_pretty(&file).expect("sweep serializes");
            s.push('\n');
            s
        }
    };
    let stdout = match &args.output {
        Some(path) => {
            std::fs::write(path, body)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            String::new()
        }
        None => body,
    };
    Ok(Outcome {
        stdout,
        passed: true,
    })
}
