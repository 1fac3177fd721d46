//! Formal replays of the elimination chains used against nonconstant `S`.

use serde::Serialize;

use super::multipoly::{Derivation, MultiPoly, Ring};
use crate::scalar::{Rational, Scalar};

type Poly = MultiPoly<Rational>;

/// One checked step of a chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub name: String,
    pub holds: bool,
}

fn step(name: &str, holds: bool) -> Step {
    Step {
        name: name.to_string(),
        holds,
    }
}

pub fn all_hold(steps: &[Step]) -> bool {
    steps.iter().all(|s| s.holds)
}

fn k(ring: &Ring, v: i64) -> Poly {
    ring.int(v)
}

/// Ring `{A, B, P, N}`, `e1(A) = a_rate P A`, `e1(B) = 0`, `e1(P) = P^2`, `N` constant.
/// `a_rate = 2` is the true rule (`A` is a sum of `n mu^2`).
pub fn theorem3_chain(a_rate: i64) -> Vec<Step> {
    let r = Ring::new(&["A", "B", "P", "N"]);
    let (a, b, p, n): (Poly, Poly, Poly, Poly) = (r.var("A"), r.var("B"), r.var("P"), r.var("N"));
    let der = Derivation::new(&r)
        .rule("A", (&p * &a).scale(&Rational::from_int(a_rate)))
        .and_then(|d| d.rule("P", p.pow(2)))
        .and_then(|d| d.constants(&["B", "N"]))
        .expect("ring variables");
    let n3 = &n - &k(&r, 3);
    let ab = &a + &b;
    let y = &(&n3 * &p.pow(2) * &a).scale(&Rational::from_int(2)) + &ab.pow(2);
    let x = &(&n3 * &p.pow(3) * &a).scale(&Rational::from_int(8))
        + &(&ab * &a * &p).scale(&Rational::from_int(4));
    let derived = der.apply(&y).expect("complete derivation");
    let first = derived == x;
    let second = match x.exact_div(&p.scale(&Rational::from_int(4))) {
        Ok(q) => &q - &y == -(&ab * &b),
        Err(_) => false,
    };
    vec![
        step("e1(2(N-3)P^2 A + (A+B)^2) = 8(N-3)P^3 A + 4(A+B)AP", first),
        step("X/(4P) - Y = -(A+B)B", second),
    ]
}

pub fn theorem3_chain_check() -> bool {
    all_hold(&theorem3_chain(2))
}

/// Checks on the `R^6` system with `u = mu^2`, `h = H^2`, `p = P^2`.
/// `q7_coeff` is the `H^2 P^2` coefficient of the last equation (250 in the
/// true chain). Also replays the derivation of every equation in the ring
/// `{mu, P, H, G}` (`G` the remaining connection coefficient) with
/// `e1(mu) = mu P`, `e1(P) = P^2`, `e1(H) = 0`, `e1(G) = G^2`.
pub fn r6_elimination(q7_coeff: i64) -> Vec<Step> {
    let mut steps = Vec::new();

    let r = Ring::new(&["u", "h", "p"]);
    let (u, h, p): (Poly, Poly, Poly) = (r.var("u"), r.var("h"), r.var("p"));
    let c = |v: i64| k(&r, v);
    let w = &(&c(2) * &u) + &(&c(25) * &h);
    let q6_den = &(&c(12) * &u) + &(&c(500) * &h);
    let q7_den = &(&c(12) * &u) + &(&c(q7_coeff) * &h);
    let q8 = &(&c(4) * &u) - &(&c(125) * &h);

    let cross = &(&(&c(2) * &u) * &q6_den) - &(&w * &q7_den);
    steps.push(step(
        "2u(12u+500h) - (2u+25h)(12u+250h) = 50h(4u-125h)",
        cross == &c(50) * &(&h * &q8),
    ));

    // p = 3w^2 / q6_den and p = 6uw / q7_den; difference numerator
    let numer = &(&(&c(3) * &w.pow(2)) * &q7_den) - &(&(&(&c(6) * &u) * &w) * &q6_den);
    steps.push(step(
        "p(E6) - p(E7) numerator divisible by 4uh - 125h^2",
        (&h * &q8).divides(&numer),
    ));

    let on_locus = |e: &Poly| {
        let u_val = &c(125) * &h;
        let sub = e
            .substitute("u", &u_val.scale(&Rational::new(1.into(), 4.into())))
            .expect("same ring");
        sub.is_zero()
    };
    // E7 with p = 3w^2/q6_den, cleared of the denominator
    let q7_cleared = &(&-&q7_den * &(&c(3) * &w.pow(2))) + &(&(&(&c(6) * &u) * &w) * &q6_den);
    steps.push(step(
        "u = 125h/4 makes the E6 solution for p satisfy E7",
        on_locus(&q7_cleared),
    ));

    let q5 = &(&(&c(32) * &u.pow(2)) * &p) - &(&(&(&c(20) * &u) * &p) * &w) + w.pow(3);
    let x = &(&(&c(4) * &u) * &p) - &w.pow(2);
    let q4 = &(&(&(&c(16) * &u.pow(2)) * &p) * &(&(&c(2) * &w) - &(&c(4) * &p)))
        + &(&(&(&c(12) * &u) * &p) * &x)
        + x.pow(2);
    steps.push(step("E4 = (2u+25h) E5", q4 == &w * &q5));

    steps.extend(r6_replay(q7_coeff));
    steps
}

/// `E1`, `E3`, ..., `E7` name the successive relations of the chain
/// (`q1`, `q3`, ... below); each one follows from the ones before it.
fn r6_replay(q7_coeff: i64) -> Vec<Step> {
    let r = Ring::new(&["mu", "P", "H", "G"]);
    let (mu, p, hh, g): (Poly, Poly, Poly, Poly) =
        (r.var("mu"), r.var("P"), r.var("H"), r.var("G"));
    let c = |v: i64| k(&r, v);
    let der = Derivation::new(&r)
        .rule("mu", &mu * &p)
        .and_then(|d| d.rule("P", p.pow(2)))
        .and_then(|d| d.rule("G", g.pow(2)))
        .and_then(|d| d.constants(&["H"]))
        .expect("ring variables");
    let d = |e: &Poly| der.apply(e).expect("complete derivation");
    let mu2 = mu.pow(2);
    let p2 = p.pow(2);
    let w = &(&c(2) * &mu2) + &(&c(25) * &hh.pow(2));

    let q1 = &(&(&c(-4) * &mu2) * &p2) + &(&(&(&c(4) * &mu2) * &p) * &g) + w.pow(2);
    let q3 = &(&(&(&c(-4) * &p2) + &(&(&c(3) * &p) * &g)) + &g.pow(2)) + &(&c(2) * &w);
    let x = &(&(&c(4) * &mu2) * &p2) - &w.pow(2);
    let q4_long = &(&(&(&c(16) * &mu2.pow(2)) * &p2) * &(&(&c(2) * &w) - &(&c(4) * &p2)))
        + &(&(&(&c(12) * &mu2) * &p2) * &x)
        + x.pow(2);
    let q5 = &(&(&(&c(32) * &mu2.pow(2)) * &p2) - &(&(&(&c(20) * &mu2) * &p2) * &w)) + &w.pow(3);
    let q6 =
        &(&(&(&c(-12) * &mu2) * &p2) - &(&(&c(500) * &hh.pow(2)) * &p2)) + &(&c(3) * &w.pow(2));
    let q7 = &(&(&(&c(-12) * &mu2) * &p2) - &(&(&c(q7_coeff) * &hh.pow(2)) * &p2))
        + &(&(&c(6) * &mu2) * &w);

    let scaled_q3 = &(&(&c(16) * &mu2.pow(2)) * &p2) * &q3;
    vec![
        step(
            "e1(E1) = 4 mu^2 P E3",
            d(&q1) == &(&(&c(4) * &mu2) * &p) * &q3,
        ),
        step(
            "16 mu^4 P^2 E3 - E4 vanishes modulo E1",
            q1.divides(&(&scaled_q3 - &q4_long)),
        ),
        step("E4 = (2 mu^2 + 25 H^2) E5", q4_long == &w * &q5),
        step(
            "e1(E5) = 4 mu^2 P E6",
            d(&q5) == &(&(&c(4) * &mu2) * &p) * &q6,
        ),
        step("e1(E6) = 4 P E7", d(&q6) == &(&c(4) * &p) * &q7),
    ]
}

pub fn r6_elimination_check() -> bool {
    all_hold(&r6_elimination(250))
}

/// Which side of the `Delta S` expansion to perturb.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma4Variant {
    /// Connection aggregate `Gamma` kept symbolic.
    SymbolicGamma,
    /// `Gamma = 0`.
    ZeroGamma,
    /// Drops the `-2cS` contribution from the expansion.
    DropTwoCS,
}

/// Checks the expansion of `Delta S + S^2 - ncS - n^2 c H^2` over the classes
/// `2..=d` with `e1(mu) = mu P`, `e1(P) = P^2 + c`: the first and second
/// derivatives of `S = sum n mu^2`, then the full display.
pub fn lemma4_steps(d: usize, variant: Lemma4Variant) -> Vec<Step> {
    let mut names = Vec::new();
    for a in 2..=d {
        names.extend([format!("mu{a}"), format!("P{a}"), format!("n{a}")]);
    }
    names.extend(["c".into(), "n".into(), "Gamma".into()]);
    let r = Ring::new(&names);
    let c: Poly = r.var("c");
    let n: Poly = r.var("n");
    let gamma: Poly = match variant {
        Lemma4Variant::ZeroGamma => r.zero(),
        _ => r.var("Gamma"),
    };
    // Gamma only multiplies e1(S); it is never differentiated
    let mut der = Derivation::new(&r)
        .constants(&["c", "n", "Gamma"])
        .expect("ring variables");
    for a in 2..=d {
        let (mu, p): (Poly, Poly) = (r.var(&format!("mu{a}")), r.var(&format!("P{a}")));
        der = der
            .rule(&format!("mu{a}"), &mu * &p)
            .and_then(|x| x.rule(&format!("P{a}"), &p.pow(2) + &c))
            .and_then(|x| x.constants(&[&format!("n{a}")]))
            .expect("ring variables");
    }
    let sum = |f: &dyn Fn(&Poly, &Poly) -> Poly| {
        (2..=d).fold(r.zero(), |acc, a| {
            let (mu, p, m): (Poly, Poly, Poly) = (
                r.var(&format!("mu{a}")),
                r.var(&format!("P{a}")),
                r.var(&format!("n{a}")),
            );
            &acc + &(&m * &f(&mu, &p))
        })
    };
    let int = |v: i64| Rational::from_int(v);

    let s = sum(&|mu, _| mu.pow(2));
    let trace = sum(&|mu, _| mu.clone());
    let rates = sum(&|_, p| p.clone());
    let mu2p = sum(&|mu, p| &mu.pow(2) * p);
    let mu2p2 = sum(&|mu, p| &mu.pow(2) * &p.pow(2));

    let es = der.apply(&s).expect("complete derivation");
    let ees = der.apply(&es).expect("complete derivation");
    let tail = &(&s.pow(2) - &(&(&n * &c) * &s)) - &(&c * &trace.pow(2));
    let lhs = &(&-&ees + &(&es * &(&rates + &gamma))) + &tail;

    let two_cs = if variant == Lemma4Variant::DropTwoCS {
        r.zero()
    } else {
        (&c * &s).scale(&int(2))
    };
    let rhs = &(&(&mu2p2.scale(&int(-6)) + &(&mu2p.scale(&int(2)) * &(&rates + &gamma))) - &two_cs)
        + &tail;
    vec![
        step("e1(S) = 2 sum n mu^2 P", es == mu2p.scale(&int(2))),
        step(
            "e1 e1(S) = 6 sum n mu^2 P^2 + 2cS",
            ees == &mu2p2.scale(&int(6)) + &(&c * &s).scale(&int(2)),
        ),
        step("expansion of Delta S + S^2 - ncS - n^2 c H^2", lhs == rhs),
    ]
}

/// The expansion holds with `Gamma` symbolic and with `Gamma = 0`, for `d = 3`.
pub fn lemma4_formal_check() -> bool {
    [Lemma4Variant::SymbolicGamma, Lemma4Variant::ZeroGamma]
        .into_iter()
        .all(|v| all_hold(&lemma4_steps(3, v)))
}
