//! Power sums `f(q) = sum n_a mu_a P_a^q` and the recurrence they satisfy.

use num_traits::One;

use super::multipoly::{Derivation, MultiPoly, Ring};
use crate::error::Result;
use crate::exactnum::double_factorial;
use crate::scalar::{Rational, Scalar};

/// `(q-1)!! / q!!` as an exact rational.
fn df_ratio(q: u32) -> Rational {
    let num = double_factorial(q as i64 - 1).expect("q - 1 >= -1");
    let den = double_factorial(q as i64).expect("q >= 0");
    Rational::new(num, den)
}

/// `f(q)`: zero for odd `q`, `((q-1)!!/q!!) (-c)^(q/2) nH` for even `q`.
pub fn closed_form_f<T: Scalar>(q: u32, c: &T, n_h: &T) -> T {
    if q % 2 == 1 {
        return T::zero();
    }
    T::from_rational(&df_ratio(q)) * (-c.clone()).powu(q / 2) * n_h.clone()
}

/// Checks `(q+1) f(q+1) + c q f(q-1) = 0` for `1 <= q <= q_max`.
/// `Err` carries the first violating `q`.
pub fn recurrence_check<T: Scalar>(q_max: u32, c: &T, n_h: &T) -> std::result::Result<(), u32> {
    recurrence_check_with(q_max, c, |q| closed_form_f(q, c, n_h))
}

/// Same as [`recurrence_check`] for an arbitrary sequence `f`.
pub fn recurrence_check_with<T: Scalar>(
    q_max: u32,
    c: &T,
    f: impl Fn(u32) -> T,
) -> std::result::Result<(), u32> {
    for q in 1..=q_max {
        let lhs =
            T::from_int(q as i64 + 1) * f(q + 1) + c.clone() * T::from_int(q as i64) * f(q - 1);
        if !lhs.is_zero() {
            return Err(q);
        }
    }
    Ok(())
}

/// `f(q)` with `nH` (and `c`, when `None`) kept as ring variables `nH`, `c`.
pub fn closed_form_symbolic(ring: &Ring, q: u32, c: Option<&Rational>) -> MultiPoly<Rational> {
    if q % 2 == 1 {
        return ring.zero();
    }
    let minus_c = match c {
        Some(c) => ring.constant(-c.clone()),
        None => -ring.var::<Rational>("c"),
    };
    (&minus_c.pow(q / 2) * &ring.var("nH")).scale(&df_ratio(q))
}

/// The recurrence as a polynomial identity in `nH` (and `c` when `None`).
pub fn recurrence_check_symbolic(q_max: u32, c: Option<&Rational>) -> std::result::Result<(), u32> {
    let ring = Ring::new(&["c", "nH"]);
    let c_poly = match c {
        Some(c) => ring.constant(c.clone()),
        None => ring.var("c"),
    };
    for q in 1..=q_max {
        let lhs = &closed_form_symbolic(&ring, q + 1, c).scale(&Rational::from_int(q as i64 + 1))
            + &(&c_poly * &closed_form_symbolic(&ring, q - 1, c))
                .scale(&Rational::from_int(q as i64));
        if !lhs.is_zero() {
            return Err(q);
        }
    }
    Ok(())
}

/// Ring `{mu_a, P_a, n_a : 2 <= a <= d} + {c}` with the derivation
/// `e1(mu_a) = mu_a P_a`, `e1(P_a) = P_a^2 + kappa c`, multiplicities and `c` constant.
/// `kappa = 1` is the true rule.
pub fn rate_ring(d: usize, kappa: i64) -> Result<(Ring, Derivation<Rational>)> {
    let classes: Vec<usize> = (2..=d).collect();
    let mut names = Vec::new();
    for a in &classes {
        names.push(format!("mu{a}"));
        names.push(format!("P{a}"));
        names.push(format!("n{a}"));
    }
    names.push("c".to_string());
    let ring = Ring::new(&names);
    let c: MultiPoly<Rational> = ring.var("c");
    let mut der = Derivation::new(&ring).constants(&["c"])?;
    for a in &classes {
        let (mu, p) = (ring.var(&format!("mu{a}")), ring.var(&format!("P{a}")));
        der = der
            .rule(&format!("mu{a}"), &mu * &p)?
            .rule(
                &format!("P{a}"),
                &p.pow(2) + &c.scale(&Rational::from_int(kappa)),
            )?
            .constants(&[&format!("n{a}")])?;
    }
    Ok((ring, der))
}

/// `sum_a n_a mu_a P_a^q` in the ring of [`rate_ring`].
pub fn power_sum(ring: &Ring, d: usize, q: u32) -> MultiPoly<Rational> {
    (2..=d).fold(ring.zero(), |acc, a| {
        let term = &(&ring.var::<Rational>(&format!("n{a}")) * &ring.var(&format!("mu{a}")))
            * &ring.var::<Rational>(&format!("P{a}")).pow(q);
        &acc + &term
    })
}

/// `e1(sum n mu P^q) = (1+q) sum n mu P^(q+1) + c q sum n mu P^(q-1)` as a
/// formal identity, for `1 <= q <= q_max`. `Err` carries the first failing `q`.
pub fn lemma3_formal_check_with(q_max: u32, d: usize, kappa: i64) -> std::result::Result<(), u32> {
    let (ring, der) = rate_ring(d, kappa).expect("well-formed ring");
    let c: MultiPoly<Rational> = ring.var("c");
    for q in 1..=q_max {
        let lhs = der
            .apply(&power_sum(&ring, d, q))
            .expect("complete derivation");
        let rhs = &power_sum(&ring, d, q + 1).scale(&Rational::from_int(q as i64 + 1))
            + &(&c * &power_sum(&ring, d, q - 1)).scale(&Rational::from_int(q as i64));
        if lhs != rhs {
            return Err(q);
        }
    }
    Ok(())
}

/// [`lemma3_formal_check_with`] for the true rule and `d = 3`.
pub fn lemma3_formal_check(q_max: u32) -> bool {
    lemma3_formal_check_with(q_max, 3, 1).is_ok()
}

/// Reference value for tests: `f(q)` straight from factorials,
/// `q! / (2^(q/2) (q/2)!)^2 (-c)^(q/2) nH` for even `q`.
#[doc(hidden)]
pub fn closed_form_by_factorials(q: u32, c: &Rational, n_h: &Rational) -> Rational {
    use num_bigint::BigInt;
    if q % 2 == 1 {
        return Rational::from_int(0);
    }
    let fact = |k: u32| (1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i));
    let half = q / 2;
    let even = BigInt::from(2).pow(half) * fact(half);
    Rational::new(fact(q), even.clone() * even) * (-c.clone()).powu(half) * n_h.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn quoted_values() {
        assert_eq!(closed_form_f(2, &int(1), &int(2)), int(-1));
        assert_eq!(closed_form_f(3, &int(5), &rat(7, 3)), int(0));
        assert_eq!(closed_form_f(6, &int(1), &int(16)), int(-5));
        assert_eq!(closed_form_f(0, &int(4), &int(9)), int(9));
    }

    #[test]
    fn agrees_with_factorial_form() {
        for q in 0..=30 {
            for c in [int(-1), int(1), rat(2, 3)] {
                assert_eq!(
                    closed_form_f(q, &c, &int(7)),
                    closed_form_by_factorials(q, &c, &int(7))
                );
            }
        }
    }

    #[test]
    fn flat_case_collapses() {
        for q in 1..20 {
            assert_eq!(closed_form_f(q, &int(0), &int(3)), int(0));
        }
    }

    #[test]
    fn recurrence_holds() {
        assert_eq!(recurrence_check(1, &int(1), &int(1)), Ok(()));
        assert_eq!(recurrence_check(30, &int(-1), &int(7)), Ok(()));
        assert_eq!(recurrence_check(30, &1.0f64, &2.0f64), Ok(()));
        for c in [int(-1), int(1)] {
            assert_eq!(recurrence_check_symbolic(30, Some(&c)), Ok(()));
        }
        assert_eq!(recurrence_check_symbolic(30, None), Ok(()));
    }

    #[test]
    fn recurrence_catches_a_wrong_f4() {
        let c = int(1);
        let n_h = int(1);
        let f = |q: u32| {
            if q == 4 {
                rat(1, 2) * c.clone() * c.clone() * n_h.clone()
            } else {
                closed_form_f(q, &c, &n_h)
            }
        };
        assert_eq!(recurrence_check_with(10, &c, f), Err(3));
    }

    #[test]
    fn formal_identity() {
        assert!(lemma3_formal_check(1));
        assert!(lemma3_formal_check(5));
        assert_eq!(lemma3_formal_check_with(6, 4, 1), Ok(()));
        assert_eq!(lemma3_formal_check_with(5, 3, -1), Err(1));
    }

    #[test]
    fn rate_ring_arity() {
        assert_eq!(rate_ring(3, 1).unwrap().0.arity(), 7);
        assert!(rate_ring(3, 1).unwrap().1.is_complete());
    }
}
