use num_traits::{One, Zero};
use proptest::prelude::*;
use triharm::catalog::{build, Family};
use triharm::conditions::{classify, Verdict};
use triharm::geometry::{
    gauss_scalar_check, invariants, invariants_from_entries, Curvature, CurvatureSpectrum,
    SpaceForm,
};
use triharm::scalar::{rat, Rational, Scalar};

fn value() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn in_unit() -> impl Strategy<Value = Rational> {
    (1i64..=98).prop_map(|k| rat(k, 99))
}

/// Distinct values with multiplicities.
fn spectrum() -> impl Strategy<Value = Vec<(Rational, usize)>> {
    prop::collection::vec((value(), 1usize..=4), 1..=5).prop_map(|mut v| {
        let mut seen: Vec<Rational> = Vec::new();
        v.retain(|(x, _)| {
            let fresh = !seen.contains(x);
            seen.push(x.clone());
            fresh
        });
        v
    })
}

fn curvature() -> impl Strategy<Value = i64> {
    -1i64..=1
}

fn setup(
    entries: &[(Rational, usize)],
    c: i64,
) -> (SpaceForm<Rational>, CurvatureSpectrum<Rational>) {
    let n = entries.iter().map(|(_, m)| m).sum::<usize>().max(2);
    let mut entries = entries.to_vec();
    let total: usize = entries.iter().map(|(_, m)| m).sum();
    if total < 2 {
        entries[0].1 += 2 - total;
    }
    (
        SpaceForm::new(n, Rational::from_int(c)).unwrap(),
        CurvatureSpectrum::from_values(entries).unwrap(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gauss_consistency(entries in spectrum(), c in curvature()) {
        let (sf, spec) = setup(&entries, c);
        prop_assert_eq!(gauss_scalar_check(&sf, &spec).unwrap(), Rational::zero());
    }

    #[test]
    fn permutation_and_split_invariance(entries in spectrum(), c in curvature(), seed in any::<u64>()) {
        let (sf, spec) = setup(&entries, c);
        let base = invariants(&sf, &spec).unwrap();

        let mut shuffled: Vec<(Rational, usize)> = spec
            .entries()
            .iter()
            .map(|(v, m)| (v.value().unwrap(), *m))
            .collect();
        let shift = (seed % shuffled.len() as u64) as usize;
        shuffled.rotate_left(shift);
        shuffled.reverse();
        let perm = CurvatureSpectrum::from_values(shuffled.clone()).unwrap();
        prop_assert_eq!(&invariants(&sf, &perm).unwrap(), &base);

        // split the first entry of multiplicity >= 2 into two equal-valued entries
        if let Some(i) = shuffled.iter().position(|(_, m)| *m >= 2) {
            let mut raw: Vec<(Curvature<Rational>, usize)> = shuffled
                .iter()
                .map(|(v, m)| (Curvature::from_value(v.clone()), *m))
                .collect();
            let m1 = 1 + (seed as usize) % (raw[i].1 - 1);
            let m2 = raw[i].1 - m1;
            raw[i].1 = m1;
            let dup = (raw[i].0.clone(), m2);
            raw.push(dup);
            prop_assert_eq!(&invariants_from_entries(&sf, &raw).unwrap(), &base);
        }
    }

    #[test]
    fn flip_invariance(entries in spectrum(), c in curvature()) {
        let (sf, spec) = setup(&entries, c);
        let a = invariants(&sf, &spec).unwrap();
        let b = invariants(&sf, &spec.flipped()).unwrap();
        prop_assert_eq!(&a.h2, &b.h2);
        prop_assert_eq!(&a.s, &b.s);
        prop_assert_eq!(&a.r, &b.r);
        prop_assert_eq!(a.n_h.negated(), b.n_h);
        prop_assert_eq!(classify(&sf, &spec).unwrap().verdict, classify(&sf, &spec.flipped()).unwrap().verdict);
    }

    #[test]
    fn nonpositive_curvature_is_never_proper(entries in spectrum(), c in -1i64..=0) {
        let (sf, spec) = setup(&entries, c);
        let rep = classify(&sf, &spec).unwrap();
        prop_assert_ne!(rep.verdict, Verdict::ProperTriharmonic);
        if c == -1 {
            prop_assert!(rep.t1 >= Rational::zero());
            let degenerate = rep.invariants.s.is_zero() && rep.invariants.h2.is_zero();
            prop_assert_eq!(rep.t1.is_zero(), degenerate);
        }
    }

    #[test]
    fn small_sphere_proper_iff_one_third(r2 in in_unit(), n in 2usize..=9) {
        let sf = SpaceForm::new(n, Rational::one()).unwrap();
        let spec = build(&sf, &Family::SmallSphere { r2: r2.clone() }).unwrap();
        let rep = classify(&sf, &spec).unwrap();
        let k = (Rational::one() - r2.clone()) / r2.clone();
        prop_assert_eq!(&rep.invariants.s, &(Rational::from_usize(n) * k.clone()));
        prop_assert_eq!(&rep.invariants.h2, &k);
        prop_assert_eq!(rep.verdict == Verdict::ProperTriharmonic, r2 == rat(1, 3));
    }

    #[test]
    fn clifford_torus_identity(a2 in in_unit(), p in 1usize..=6, q in 1usize..=6) {
        let sf = SpaceForm::new(p + q, Rational::one()).unwrap();
        let spec = build(&sf, &Family::CliffordTorus { p, q, a2: a2.clone() }).unwrap();
        let inv = invariants(&sf, &spec).unwrap();
        let b2 = Rational::one() - a2.clone();
        prop_assert_eq!(
            inv.s * a2.clone() * b2.clone(),
            Rational::from_usize(p) * b2.clone() * b2 + Rational::from_usize(q) * a2.clone() * a2
        );
        prop_assert_eq!(gauss_scalar_check(&sf, &spec).unwrap(), Rational::zero());
    }

    #[test]
    fn hyperbolic_cylinder_product(k in 1i64..=40, p in 1usize..=4, extra in 1usize..=4) {
        let lambda = rat(k + 12, 12);
        let sf = SpaceForm::new(p + extra, -Rational::one()).unwrap();
        let spec = build(&sf, &Family::HyperbolicCylinder { p, lambda }).unwrap();
        let vals: Vec<Rational> = spec.entries().iter().map(|(v, _)| v.value().unwrap()).collect();
        prop_assert_eq!(vals[0].clone() * vals[1].clone(), Rational::one());
        prop_assert_eq!(spec.dimension(), p + extra);
        prop_assert_eq!(gauss_scalar_check(&sf, &spec).unwrap(), Rational::zero());
    }
}

#[test]
fn equal_values_must_be_merged_in_a_spectrum() {
    assert!(CurvatureSpectrum::from_values(vec![(rat(1, 2), 1), (rat(1, 2), 2)]).is_err());
}
