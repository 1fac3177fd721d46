//! Space forms, principal-curvature spectra and their scalar invariants.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Ambient space form `N^{n+1}(c)` seen from a hypersurface of dimension `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceForm<T> {
    n: usize,
    c: T,
}

impl<T: Scalar> SpaceForm<T> {
    pub fn new(n: usize, c: T) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n, 2));
        }
        Ok(SpaceForm { n, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn n_scalar(&self) -> T {
        T::from_usize(self.n)
    }
}

/// A principal curvature stored as `sign * sqrt(square)`.
///
/// Rational curvatures are the case where `square` is a perfect square; the
/// signed-root form keeps quadratic irrationals such as `sqrt(2)` exact.
#[derive(Clone, Debug, PartialEq)]
pub struct Curvature<T> {
    square: T,
    sign: Ordering,
}

impl<T: Scalar> Curvature<T> {
    pub fn from_value(v: T) -> Self {
        let sign = v.sign();
        Curvature {
            square: v.clone() * v,
            sign,
        }
    }

    /// `sign * sqrt(square)`; a zero square forces a zero sign.
    pub fn signed_sqrt(square: T, sign: Ordering) -> Result<Self> {
        match square.sign() {
            Ordering::Less => Err(Error::InvalidSpectrum(format!(
                "negative square {square} for a principal curvature"
            ))),
            Ordering::Equal => Ok(Curvature {
                square,
                sign: Ordering::Equal,
            }),
            Ordering::Greater if sign == Ordering::Equal => Err(Error::InvalidSpectrum(
                "nonzero square with zero sign".into(),
            )),
            Ordering::Greater => Ok(Curvature { square, sign }),
        }
    }

    pub fn zero() -> Self {
        Curvature {
            square: T::zero(),
            sign: Ordering::Equal,
        }
    }

    pub fn square(&self) -> &T {
        &self.square
    }

    pub fn sign(&self) -> Ordering {
        self.sign
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Ordering::Equal
    }

    /// The value itself, when the square has a representable root.
    pub fn value(&self) -> Option<T> {
        let r = self.square.exact_sqrt()?;
        Some(apply_sign(r, self.sign))
    }

    /// `self * other`, when representable.
    pub fn product(&self, other: &Self) -> Option<T> {
        let sign = mul_sign(self.sign, other.sign);
        if sign == Ordering::Equal {
            return Some(T::zero());
        }
        let r = (self.square.clone() * other.square.clone()).exact_sqrt()?;
        Some(apply_sign(r, sign))
    }

    pub fn negated(&self) -> Self {
        Curvature {
            square: self.square.clone(),
            sign: self.sign.reverse(),
        }
    }

    pub fn approx(&self) -> f64 {
        let m = self.square.to_f64().sqrt();
        match self.sign {
            Ordering::Less => -m,
            Ordering::Equal => 0.0,
            Ordering::Greater => m,
        }
    }
}

fn mul_sign(a: Ordering, b: Ordering) -> Ordering {
    match (a, b) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
        (x, y) if x == y => Ordering::Greater,
        _ => Ordering::Less,
    }
}

fn apply_sign<T: Scalar>(v: T, s: Ordering) -> T {
    match s {
        Ordering::Less => -v,
        Ordering::Equal => T::zero(),
        Ordering::Greater => v,
    }
}

impl<T: Scalar> fmt::Display for Curvature<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if T::EXACT {
            if let Some(v) = self.value() {
                return write!(f, "{v}");
            }
            let s = if self.sign == Ordering::Less { "-" } else { "" };
            write!(f, "{s}sqrt({})", self.square)
        } else {
            write!(f, "{}", self.value().unwrap_or_else(T::zero))
        }
    }
}

/// Distinct principal curvatures with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureSpectrum<T> {
    entries: Vec<(Curvature<T>, usize)>,
}

impl<T: Scalar> CurvatureSpectrum<T> {
    pub fn new(entries: Vec<(Curvature<T>, usize)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSpectrum("empty spectrum".into()));
        }
        for (i, (v, m)) in entries.iter().enumerate() {
            if *m == 0 {
                return Err(Error::InvalidSpectrum(format!(
                    "entry {v} has multiplicity 0"
                )));
            }
            if entries[..i].iter().any(|(w, _)| w == v) {
                return Err(Error::InvalidSpectrum(format!("repeated value {v}")));
            }
        }
        Ok(CurvatureSpectrum { entries })
    }

    pub fn from_values(entries: Vec<(T, usize)>) -> Result<Self> {
        Self::new(
            entries
                .into_iter()
                .map(|(v, m)| (Curvature::from_value(v), m))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[(Curvature<T>, usize)] {
        &self.entries
    }

    /// Number of distinct principal curvatures.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Normal-orientation flip: every curvature changes sign.
    pub fn flipped(&self) -> Self {
        CurvatureSpectrum {
            entries: self
                .entries
                .iter()
                .map(|(v, m)| (v.negated(), *m))
                .collect(),
        }
    }

    /// One principal curvature per tangent direction.
    pub fn expanded(&self) -> Vec<Curvature<T>> {
        self.entries
            .iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v.clone(), *m))
            .collect()
    }
}

/// Scalar invariants of a hypersurface with constant principal curvatures.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSet<T> {
    /// Trace of the shape operator, `n H`, kept in signed-root form.
    pub n_h: Curvature<T>,
    pub h2: T,
    pub s: T,
    pub r: T,
}

fn check_dimension<T: Scalar>(sf: &SpaceForm<T>, entries: &[(Curvature<T>, usize)]) -> Result<()> {
    let got: usize = entries.iter().map(|(_, m)| m).sum();
    if got != sf.n() {
        return Err(Error::MultiplicityMismatch {
            expected: sf.n(),
            got,
        });
    }
    Ok(())
}

fn pair_product<T: Scalar>(a: &Curvature<T>, b: &Curvature<T>) -> Result<T> {
    a.product(b)
        .ok_or_else(|| Error::NotExact(format!("product of {a} and {b} is irrational")))
}

/// `nH`, `H^2`, `S` and `R = n(n-1)c + n^2 H^2 - S`.
pub fn invariants<T: Scalar>(
    sf: &SpaceForm<T>,
    spec: &CurvatureSpectrum<T>,
) -> Result<InvariantSet<T>> {
    invariants_from_entries(sf, spec.entries())
}

/// [`invariants`] on raw `(value, multiplicity)` entries; values may repeat.
pub fn invariants_from_entries<T: Scalar>(
    sf: &SpaceForm<T>,
    entries: &[(Curvature<T>, usize)],
) -> Result<InvariantSet<T>> {
    check_dimension(sf, entries)?;
    let mult = |m: usize| T::from_usize(m);

    let s = entries
        .iter()
        .fold(T::zero(), |acc, (v, m)| acc + mult(*m) * v.square().clone());

    // (sum n_a l_a)^2 over all ordered pairs, plus the same restricted to each sign
    let mut trace_sq = T::zero();
    let mut pos_sq = T::zero();
    let mut neg_sq = T::zero();
    for (a, ma) in entries {
        for (b, mb) in entries {
            let term = mult(*ma) * mult(*mb) * pair_product(a, b)?;
            trace_sq = trace_sq + term.clone();
            match (a.sign(), b.sign()) {
                (Ordering::Greater, Ordering::Greater) => pos_sq = pos_sq + term,
                (Ordering::Less, Ordering::Less) => neg_sq = neg_sq + term,
                _ => {}
            }
        }
    }
    let trace_sign = if trace_sq.is_zero() {
        Ordering::Equal
    } else {
        pos_sq.partial_cmp(&neg_sq).unwrap_or(Ordering::Equal)
    };
    let n = sf.n_scalar();
    let h2 = trace_sq.clone() / (n.clone() * n.clone());
    let r = n.clone() * (n.clone() - T::one()) * sf.c().clone() + trace_sq.clone() - s.clone();
    let n_h = if trace_sign == Ordering::Equal {
        Curvature::zero()
    } else {
        Curvature::signed_sqrt(trace_sq, trace_sign)?
    };
    Ok(InvariantSet { n_h, h2, s, r })
}

/// `sum_{i != j} (c + l_i l_j) - R`: zero whenever the Gauss equation and the
/// scalar-curvature formula agree. Exact arithmetic only.
pub fn gauss_scalar_check<T: Scalar>(sf: &SpaceForm<T>, spec: &CurvatureSpectrum<T>) -> Result<T> {
    if !T::EXACT {
        return Err(Error::NotExact(
            "the Gauss check needs an exact scalar type".into(),
        ));
    }
    let inv = invariants(sf, spec)?;
    let dirs = spec.expanded();
    let mut sectional_sum = T::zero();
    for (i, a) in dirs.iter().enumerate() {
        for (j, b) in dirs.iter().enumerate() {
            if i != j {
                sectional_sum = sectional_sum + sf.c().clone() + pair_product(a, b)?;
            }
        }
    }
    Ok(sectional_sum - inv.r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    fn sf(n: usize, c: i64) -> SpaceForm<Rational> {
        SpaceForm::new(n, int(c)).unwrap()
    }

    #[test]
    fn small_sphere_in_s5() {
        let spec = CurvatureSpectrum::new(vec![(
            Curvature::signed_sqrt(int(2), Ordering::Greater).unwrap(),
            4,
        )])
        .unwrap();
        let inv = invariants(&sf(4, 1), &spec).unwrap();
        assert_eq!(inv.h2, int(2));
        assert_eq!(inv.s, int(8));
        assert_eq!(inv.r, int(36));
        assert_eq!(inv.n_h.square(), &int(32));
        assert_eq!(inv.n_h.sign(), Ordering::Greater);
        assert_eq!(inv.n_h.to_string(), "sqrt(32)");
    }

    #[test]
    fn totally_geodesic() {
        let spec = CurvatureSpectrum::from_values(vec![(int(0), 3)]).unwrap();
        let inv = invariants(&sf(3, 0), &spec).unwrap();
        assert!(inv.n_h.is_zero());
        assert_eq!(inv.s, int(0));
        assert_eq!(inv.r, int(0));
    }

    #[test]
    fn minimal_clifford_torus_is_flat() {
        let spec = CurvatureSpectrum::from_values(vec![(int(1), 1), (int(-1), 1)]).unwrap();
        let inv = invariants(&sf(2, 1), &spec).unwrap();
        assert!(inv.n_h.is_zero());
        assert_eq!(inv.s, int(2));
        assert_eq!(inv.r, int(0));
    }

    #[test]
    fn gauss_defect_two_values() {
        let spec = CurvatureSpectrum::from_values(vec![(int(2), 2), (int(-1), 1)]).unwrap();
        // ordered pairs: (2,2) twice -> 4 each; (2,-1) four times -> -2 each; 6c = 6
        // R' = 6 + 8 - 8 = 6 ; R = 6 + 9 - 9 = 6
        assert_eq!(gauss_scalar_check(&sf(3, 1), &spec).unwrap(), int(0));
        assert_eq!(invariants(&sf(3, 1), &spec).unwrap().r, int(6));
    }

    #[test]
    fn gauss_defect_r6_configuration() {
        let (mu, h) = (rat(3, 2), rat(2, 7));
        let spec = CurvatureSpectrum::from_values(vec![
            (int(0), 2),
            (mu.clone(), 1),
            (-mu, 1),
            (int(5) * h, 1),
        ])
        .unwrap();
        assert_eq!(gauss_scalar_check(&sf(5, 0), &spec).unwrap(), int(0));
    }

    #[test]
    fn mismatch_and_malformed_rejected() {
        let spec = CurvatureSpectrum::from_values(vec![(int(1), 2)]).unwrap();
        assert_eq!(
            invariants(&sf(3, 1), &spec),
            Err(Error::MultiplicityMismatch {
                expected: 3,
                got: 2
            })
        );
        assert!(CurvatureSpectrum::from_values(vec![(int(1), 1), (int(1), 2)]).is_err());
        assert!(CurvatureSpectrum::from_values(vec![(int(1), 0)]).is_err());
        assert!(SpaceForm::new(1, int(0)).is_err());
    }

    #[test]
    fn irrational_cross_terms_are_reported() {
        let spec = CurvatureSpectrum::new(vec![
            (
                Curvature::signed_sqrt(int(2), Ordering::Greater).unwrap(),
                1,
            ),
            (
                Curvature::signed_sqrt(int(3), Ordering::Greater).unwrap(),
                1,
            ),
        ])
        .unwrap();
        assert!(matches!(
            invariants(&sf(2, 1), &spec),
            Err(Error::NotExact(_))
        ));
    }

    #[test]
    fn gauss_check_refuses_floats() {
        let sf = SpaceForm::new(2, 1.0f64).unwrap();
        let spec = CurvatureSpectrum::from_values(vec![(1.0f64, 2)]).unwrap();
        assert!(gauss_scalar_check(&sf, &spec).is_err());
    }

    #[test]
    fn float_path_agrees() {
        let sf = SpaceForm::new(3, 1.0f64).unwrap();
        let spec = CurvatureSpectrum::from_values(vec![(2.0f64, 2), (-1.0, 1)]).unwrap();
        let inv = invariants(&sf, &spec).unwrap();
        assert!((inv.h2 - 1.0).abs() < 1e-12);
        assert!((inv.s - 9.0).abs() < 1e-12);
        assert!((inv.n_h.approx() - 3.0).abs() < 1e-12);
    }
}
