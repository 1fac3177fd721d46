use num_traits::Zero;
use triharm::catalog::{build, Family};
use triharm::conditions::classify;
use triharm::geometry::{gauss_scalar_check, SpaceForm};
use triharm::scalar::{Rational, Scalar};

use super::{param_map, Failure};
use crate::args::{CheckArgs, FamilyArgs};
use crate::report::{entries, Check, RunReport, Space};

/// Validates the flags and builds the family member they describe.
pub(crate) fn instance(
    args: &FamilyArgs,
) -> Result<(SpaceForm<Rational>, Family<Rational>), Failure> {
    let n =
        usize::try_from(args.n).map_err(|_| Failure::Usage(format!("n = {} too large", args.n)))?;
    let sf = SpaceForm::new(n, Rational::from_int(args.curvature))?;
    let fam = Family::from_params(args.family, &param_map(&args.params)?)?;
    Ok((sf, fam))
}

pub(crate) fn run(args: &CheckArgs, echo: String) -> Result<RunReport, Failure> {
    let (sf, fam) = instance(&args.family)?;
    let spec = build(&sf, &fam)?;
    let rep = classify(&sf, &spec)?;

    let mut report = RunReport::new(echo);
    report.space = Some(Space::of(&sf));
    report.family = Some(fam.tag().to_string());
    report.params = fam.params().into_iter().collect();
    report.spectrum = entries(&spec);
    report.set_classification(&rep);

    let defect = gauss_scalar_check(&sf, &spec)?;
    report
        .checks
        .push(Check::new("gauss_consistency", defect.is_zero()).detail(format!("defect {defect}")));
    if let Some(want) = args.expect {
        report.checks.push(
            Check::new("expected_verdict", rep.verdict == want)
                .detail(format!("expected {want}, got {}", rep.verdict)),
        );
    }
    Ok(report)
}
