//! Multivariate polynomials over a fixed, named variable set, and formal
//! derivations on them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Named variables of a polynomial ring. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Ring {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The variable `name` as a polynomial. Panics on an unknown name, which
    /// is a programming error in a hand-written identity.
    pub fn var<T: Scalar>(&self, name: &str) -> MultiPoly<T> {
        let i = self
            .index(name)
            .unwrap_or_else(|_| panic!("variable `{name}` not in ring {:?}", self.names));
        let mut e = vec![0; self.arity()];
        e[i] = 1;
        MultiPoly::term(self, e, T::one())
    }

    pub fn constant<T: Scalar>(&self, c: T) -> MultiPoly<T> {
        MultiPoly::term(self, vec![0; self.arity()], c)
    }

    pub fn int<T: Scalar>(&self, c: i64) -> MultiPoly<T> {
        self.constant(T::from_int(c))
    }

    pub fn zero<T: Scalar>(&self) -> MultiPoly<T> {
        MultiPoly {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }
}

/// Exponent vector, one entry per ring variable.
pub type Monomial = Vec<u32>;

/// Sparse in terms, dense in exponents. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<T> {
    ring: Ring,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> MultiPoly<T> {
    pub fn term(ring: &Ring, exps: Monomial, coeff: T) -> Self {
        assert_eq!(exps.len(), ring.arity());
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, exps: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.ring.zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = self.ring.zero();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.constant(T::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes a value for every variable.
    pub fn eval(&self, point: &[T]) -> Result<T> {
        if point.len() != self.ring.arity() {
            return Err(Error::LengthMismatch(point.len(), self.ring.arity()));
        }
        Ok(self.terms.iter().fold(T::zero(), |acc, (e, c)| {
            let m = e
                .iter()
                .zip(point)
                .fold(T::one(), |m, (k, x)| m * x.powu(*k));
            acc + c.clone() * m
        }))
    }

    /// Replaces variable `name` by the polynomial `value`.
    pub fn substitute(&self, name: &str, value: &Self) -> Result<Self> {
        self.check_ring(value)?;
        let i = self.ring.index(name)?;
        let mut out = self.ring.zero();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = std::mem::take(&mut rest[i]);
            let base = MultiPoly::term(&self.ring, rest, c.clone());
            out = &out + &(&base * &value.pow(k));
        }
        Ok(out)
    }

    /// Lexicographically leading term (first variable most significant).
    fn leading(&self) -> Option<(&Monomial, &T)> {
        self.terms.iter().next_back()
    }

    /// Multivariate division with remainder in lex order. The quotient is
    /// exact (remainder zero) exactly when the divisor divides `self`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_ring(divisor)?;
        let (dlm, dlc) = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        let (dlm, dlc) = (dlm.clone(), dlc.clone());
        let mut p = self.clone();
        let mut quot = self.ring.zero();
        let mut rem = self.ring.zero();
        while let Some((lm, lc)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.iter().zip(&dlm).all(|(a, b)| a >= b) {
                let e: Monomial = lm.iter().zip(&dlm).map(|(a, b)| a - b).collect();
                let t = MultiPoly::term(&self.ring, e, lc / dlc.clone());
                p = &p - &(&t * divisor);
                quot = &quot + &t;
            } else {
                p.terms.remove(&lm);
                rem.add_term(lm, lc);
            }
        }
        Ok((quot, rem))
    }

    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn divides(&self, dividend: &Self) -> bool {
        matches!(dividend.div_rem(self), Ok((_, r)) if r.is_zero())
    }
}

impl<T: Scalar> Add for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn add(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        self.checked_add(rhs).expect("same ring")
    }
}

impl<T: Scalar> Sub for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn sub(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        self.checked_add(&-rhs).expect("same ring")
    }
}

impl<T: Scalar> Mul for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn mul(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        self.checked_mul(rhs).expect("same ring")
    }
}

impl<T: Scalar> Neg for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn neg(self) -> MultiPoly<T> {
        self.scale(&-T::one())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for MultiPoly<T> {
            type Output = MultiPoly<T>;
            fn $m(self, rhs: MultiPoly<T>) -> MultiPoly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&MultiPoly<T>> for MultiPoly<T> {
            type Output = MultiPoly<T>;
            fn $m(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
                (&self).$m(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<T: Scalar> Neg for MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn neg(self) -> MultiPoly<T> {
        -&self
    }
}

impl<T: Scalar> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.sign() == Ordering::Less;
            let mag = c.abs_val();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .zip(self.ring.names())
                .filter(|(k, _)| **k > 0)
                .map(|(k, n)| {
                    if *k == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{k}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A derivation: images of the ring variables, extended by linearity and the
/// Leibniz rule.
#[derive(Clone, Debug)]
pub struct Derivation<T> {
    ring: Ring,
    rules: BTreeMap<usize, MultiPoly<T>>,
}

impl<T: Scalar> Derivation<T> {
    pub fn new(ring: &Ring) -> Self {
        Derivation {
            ring: ring.clone(),
            rules: BTreeMap::new(),
        }
    }

    /// Sets `D(name) = image`.
    pub fn rule(mut self, name: &str, image: MultiPoly<T>) -> Result<Self> {
        if image.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        let i = self.ring.index(name)?;
        self.rules.insert(i, image);
        Ok(self)
    }

    /// Marks variables as constants (`D(x) = 0`).
    pub fn constants(mut self, names: &[&str]) -> Result<Self> {
        for name in names {
            let i = self.ring.index(name)?;
            self.rules.insert(i, self.ring.zero());
        }
        Ok(self)
    }

    pub fn is_complete(&self) -> bool {
        self.rules.len() == self.ring.arity()
    }

    /// `D(p)`. Fails if `p` mentions a variable without a rule.
    pub fn apply(&self, p: &MultiPoly<T>) -> Result<MultiPoly<T>> {
        if p.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = self.ring.zero();
        for (e, c) in &p.terms {
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let image = self
                    .rules
                    .get(&i)
                    .ok_or_else(|| Error::MissingRule(self.ring.names()[i].clone()))?;
                let mut lowered = e.clone();
                lowered[i] -= 1;
                let coeff = c.clone() * T::from_int(k as i64);
                let part = MultiPoly::term(&self.ring, lowered, coeff);
                out = &out + &(&part * image);
            }
        }
        Ok(out)
    }
}

/// `D(p)`.
pub fn formal_derive<T: Scalar>(p: &MultiPoly<T>, d: &Derivation<T>) -> Result<MultiPoly<T>> {
    d.apply(p)
}
