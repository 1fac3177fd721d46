use num_traits::Zero;
use proptest::prelude::*;
use triharm::moments::{
    closed_form_f, uniform_rate_certificate, vandermonde_identity_check, Derivation, MomentSystem,
    MultiPoly, Ring, Status, UniformCase, VandermondeMode,
};
use triharm::scalar::{int, Rational};

type Poly = MultiPoly<Rational>;

fn ring() -> Ring {
    Ring::new(&["x", "y", "z"])
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), small_rational()), 0..6).prop_map(
        |terms| {
            let r = ring();
            terms
                .into_iter()
                .fold(r.zero(), |acc, (e, c)| &acc + &Poly::term(&r, e, c))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn leibniz_rule(p in poly(), q in poly(), dx in poly(), dy in poly(), dz in poly()) {
        let d = Derivation::new(&ring())
            .rule("x", dx).unwrap()
            .rule("y", dy).unwrap()
            .rule("z", dz).unwrap();
        let lhs = d.apply(&(&p * &q)).unwrap();
        let rhs = &(&d.apply(&p).unwrap() * &q) + &(&p * &d.apply(&q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_round_trip(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        let prod = &p * &q;
        prop_assert_eq!(prod.exact_div(&q).unwrap(), p);
    }
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |x| !x.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solve_recovers_masses(
        pairs in prop::collection::vec((small_rational(), nonzero_rational()), 1..=4),
        extra in 0u32..=3,
    ) {
        let (masses, rates): (Vec<Rational>, Vec<Rational>) = pairs.into_iter().unzip();
        let q_max = rates.len() as u32 + extra;
        let (sys, collapsed) = MomentSystem::from_assignment(&masses, &rates, q_max).unwrap();
        let cert = sys.solve().unwrap();
        prop_assert_eq!(cert.status, Status::Feasible);
        prop_assert_eq!(cert.masses().unwrap(), collapsed.as_slice());
        prop_assert!(sys.verify(&cert));
    }

    #[test]
    fn perturbed_target_is_caught(
        pairs in prop::collection::vec((small_rational(), nonzero_rational()), 1..=4),
        bump in nonzero_rational(),
    ) {
        let (masses, rates): (Vec<Rational>, Vec<Rational>) = pairs.into_iter().unzip();
        let (mut sys, _) = MomentSystem::from_assignment(&masses, &rates, 6).unwrap();
        let last = sys.targets.len() - 1;
        prop_assume!(sys.rates.len() <= last);
        sys.targets[last] = sys.targets[last].clone() + bump;
        let cert = sys.solve().unwrap();
        prop_assert_eq!(cert.status, Status::Infeasible);
        prop_assert!(sys.verify(&cert));
    }

    #[test]
    fn uniform_rate_always_infeasible(c in nonzero_rational()) {
        let one = uniform_rate_certificate(&c, UniformCase::Case1).unwrap();
        let three = uniform_rate_certificate(&c, UniformCase::Case3).unwrap();
        prop_assert_eq!(one.defect().cloned(), Some(-c.clone() * c.clone() / int(8)));
        prop_assert_eq!(three.defect().cloned(), Some(c.clone() / int(12)));
        prop_assert!(one.verify() && three.verify());
    }

    #[test]
    fn flat_closed_form(q in 1u32..40, n_h in small_rational()) {
        prop_assert_eq!(closed_form_f(q, &int(0), &n_h), int(0));
        prop_assert_eq!(closed_form_f(0, &int(0), &n_h.clone()), n_h);
    }

    #[test]
    fn vandermonde_identity(values in prop::collection::vec(small_rational(), 1..=6)) {
        prop_assert!(vandermonde_identity_check(&values, VandermondeMode::Odd));
        prop_assert!(vandermonde_identity_check(&values, VandermondeMode::Consecutive));
    }
}
