use num_traits::Zero;
use serde_json::json;
use triharm::moments::chains::all_hold;
use triharm::moments::{
    closed_form_f, lemma3_formal_check_with, lemma4_steps, r6_elimination, recurrence_check,
    recurrence_check_symbolic, recurrence_check_with, theorem3_chain, uniform_rate_certificate,
    vandermonde_random_suite, Lemma4Variant, MomentSystem, Step, UniformCase,
};
use triharm::scalar::int;

use crate::args::{IdentitiesArgs, Suite};
use crate::report::{Check, RunReport};

/// Largest tuple size in the random Vandermonde suite.
const VANDERMONDE_MAX_K: usize = 6;

fn first_failure(r: Result<(), u32>) -> String {
    match r {
        Ok(()) => "holds".to_string(),
        Err(q) => format!("fails at q = {q}"),
    }
}

fn chain(name: &str, steps: &[Step], expect_hold: bool) -> Check {
    let holds = all_hold(steps);
    let failed: Vec<&str> = steps
        .iter()
        .filter(|s| !s.holds)
        .map(|s| s.name.as_str())
        .collect();
    let detail = if failed.is_empty() {
        format!("{} steps hold", steps.len())
    } else {
        format!("failing: {}", failed.join("; "))
    };
    Check::new(name, holds == expect_hold)
        .detail(detail)
        .data(serde_json::to_value(steps).expect("steps serialize"))
}

fn lemma3(q_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let n_h = int(7);
    for c in [1, -1] {
        let r = recurrence_check(q_max, &int(c), &n_h);
        out.push(Check::new(format!("recurrence_c{c:+}"), r.is_ok()).detail(first_failure(r)));
        let r = recurrence_check_symbolic(q_max, Some(&int(c)));
        out.push(
            Check::new(format!("recurrence_c{c:+}_symbolic_nH"), r.is_ok())
                .detail(first_failure(r)),
        );
    }
    let r = recurrence_check_symbolic(q_max, None);
    out.push(Check::new("recurrence_symbolic_c_nH", r.is_ok()).detail(first_failure(r)));
    let r = lemma3_formal_check_with(q_max, 3, 1);
    out.push(Check::new("formal_derivation_d3", r.is_ok()).detail(first_failure(r)));

    // mutations must be caught
    let reach = q_max.max(4);
    let c = int(1);
    let bumped = |q: u32| {
        let f = closed_form_f(q, &c, &n_h);
        if q == 4 {
            f * int(2)
        } else {
            f
        }
    };
    let r = recurrence_check_with(reach, &c, bumped);
    out.push(Check::new("mutation_doubled_f4_rejected", r.is_err()).detail(first_failure(r)));
    let r = lemma3_formal_check_with(q_max, 3, -1);
    out.push(Check::new("mutation_rate_rule_sign_rejected", r.is_err()).detail(first_failure(r)));
    out
}

fn lemma4() -> Vec<Check> {
    let drop = lemma4_steps(3, Lemma4Variant::DropTwoCS);
    let only_last = drop.iter().rev().skip(1).all(|s| s.holds);
    vec![
        chain(
            "expansion_symbolic_gamma",
            &lemma4_steps(3, Lemma4Variant::SymbolicGamma),
            true,
        ),
        chain(
            "expansion_zero_gamma",
            &lemma4_steps(3, Lemma4Variant::ZeroGamma),
            true,
        ),
        chain("mutation_drop_2cS_rejected", &drop, false),
        Check::new("mutation_drop_2cS_only_breaks_expansion", only_last),
    ]
}

fn vandermonde(cases: usize, seed: u64) -> Vec<Check> {
    let out = vandermonde_random_suite(cases, VANDERMONDE_MAX_K, seed);
    let mut check = Check::new("random_tuples_both_modes", out.failures == 0)
        .detail(format!(
            "{} tuples, {} degenerate, {} failures",
            out.cases, out.degenerate, out.failures
        ))
        .data(json!({
            "cases": out.cases,
            "max_k": VANDERMONDE_MAX_K,
            "seed": seed,
            "degenerate": out.degenerate,
            "failures": out.failures,
        }));
    if let Some(f) = out.first_failure {
        check = check.detail(format!("first failure {f}"));
    }
    vec![check]
}

fn theorem3() -> Vec<Check> {
    vec![
        chain("chain", &theorem3_chain(2), true),
        chain("mutation_rate_of_A_rejected", &theorem3_chain(1), false),
    ]
}

fn r6() -> Vec<Check> {
    vec![
        chain("elimination_and_replay", &r6_elimination(250), true),
        chain(
            "mutation_last_coefficient_rejected",
            &r6_elimination(260),
            false,
        ),
    ]
}

fn certificates() -> Vec<Check> {
    let mut out = Vec::new();
    for c in [1i64, -1] {
        for case in [UniformCase::Case1, UniformCase::Case3] {
            let cert = uniform_rate_certificate(&int(c), case).expect("c is nonzero");
            let ok =
                !cert.is_feasible() && cert.verify() && cert.defect().is_some_and(|d| !d.is_zero());
            let defect = cert.defect().map(|d| d.to_string()).unwrap_or_default();
            out.push(
                Check::new(format!("uniform_{case:?}_c{c:+}").to_lowercase(), ok)
                    .detail(format!("defect {defect}"))
                    .data(serde_json::to_value(&cert).expect("certificate serializes")),
            );
        }
    }
    // c = 0 forces every moment to vanish, which zero masses satisfy
    let sys = MomentSystem::from_closed_form(&int(0), &int(1), vec![int(1), int(2), int(-3)], 8);
    let flat = sys
        .solve()
        .is_ok_and(|cert| cert.is_feasible() && sys.verify(&cert));
    out.push(Check::new("flat_moments_feasible", flat));
    out
}

pub(crate) fn run(args: &IdentitiesArgs, echo: String) -> RunReport {
    let mut report = RunReport::new(echo);
    let want = |s: Suite| args.suite == s || args.suite == Suite::All;
    let mut add = |suite: &str, checks: Vec<Check>| {
        for mut c in checks {
            c.name = format!("{suite}.{}", c.name);
            report.checks.push(c);
        }
    };
    if want(Suite::Lemma3) {
        add("lemma3", lemma3(args.qmax));
    }
    if want(Suite::Lemma4) {
        add("lemma4", lemma4());
    }
    if want(Suite::Vandermonde) {
        add("vandermonde", vandermonde(args.cases, args.seed));
    }
    if want(Suite::Theorem3) {
        add("theorem3", theorem3());
    }
    if want(Suite::R6) {
        add("r6", r6());
    }
    if want(Suite::Certificates) {
        add("certificates", certificates());
    }
    report
}
