use serde_json::{json, Value};
use triharm::catalog::{build, Family};
use triharm::conditions::{classify, Verdict};
use triharm::corollary::{corollary_crosscheck, torus_residual_resultant};
use triharm::geometry::SpaceForm;
use triharm::scalar::{rat, Rational, Scalar};
use triharm::Error;

use super::Failure;
use crate::args::CorollaryArgs;
use crate::report::{Check, RunReport, Space};

pub(crate) fn run(args: &CorollaryArgs, echo: String) -> Result<RunReport, Failure> {
    let n =
        usize::try_from(args.n).map_err(|_| Failure::Usage(format!("n = {} too large", args.n)))?;
    let digits = args.digits as usize;
    let resultant = torus_residual_resultant(n)?;

    let mut report = RunReport::new(echo);
    report.space = Some(Space {
        n,
        c: "1".to_string(),
    });
    report.family = Some("clifford".to_string());
    report.params = [
        ("p".to_string(), (n - 1).to_string()),
        ("q".to_string(), "1".to_string()),
    ]
    .into_iter()
    .collect();

    let mut corollary = json!({});
    match corollary_crosscheck(n, digits) {
        Ok(res) => {
            report.params.insert("a2".to_string(), res.a2.clone());
            report.checks.push(
                Check::new(
                    "t0_unique_in_0_2",
                    res.sturm_unique && res.bracket_certified,
                )
                .detail(format!(
                    "bracket [{}, {}]",
                    res.t0_bracket[0], res.t0_bracket[1]
                )),
            );
            report
                .checks
                .push(Check::new("torus_crosscheck", true).detail(format!(
                    "|H2 - t0| = {}, |residual| = {}, tolerance {}",
                    res.h2_error, res.residual, res.tolerance
                )));
            corollary = serde_json::to_value(&res).expect("result serializes");
        }
        Err(Error::CheckFailed(msg)) => {
            report
                .checks
                .push(Check::new("torus_crosscheck", false).detail(msg));
        }
        Err(e) => return Err(e.into()),
    }

    let quotient = resultant.quotient.as_ref().map(|q| q.to_string());
    report.checks.push(
        Check::new("resultant_divisible_by_f_n", resultant.divisible).detail(match &quotient {
            Some(q) => format!("quotient {q}"),
            None => "not divisible".to_string(),
        }),
    );
    if let Value::Object(map) = &mut corollary {
        map.insert(
            "resultant".to_string(),
            json!({
                "polynomial": resultant.resultant.to_string(),
                "divisor": resultant.divisor.to_string(),
                "divisible": resultant.divisible,
                "quotient": quotient,
            }),
        );
    }
    report.corollary = Some(corollary);

    // The other branch: S^n(1/sqrt 3) with H^2 = 2.
    let sf = SpaceForm::new(n, Rational::from_int(1))?;
    let spec = build(&sf, &Family::SmallSphere { r2: rat(1, 3) })?;
    let rep = classify(&sf, &spec)?;
    report.checks.push(
        Check::new(
            "small_sphere_branch",
            rep.verdict == Verdict::ProperTriharmonic && rep.invariants.h2 == Rational::from_int(2),
        )
        .detail(format!("H2 = {}, residual = {}", rep.invariants.h2, rep.t1)),
    );
    Ok(report)
}
