//! Decimal floating point at a caller-chosen precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::DBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

pub const DEFAULT_DIGITS: usize = 40;
pub const MIN_DIGITS: usize = 16;

/// A decimal float rounded to nearest at `digits()` significant digits.
///
/// Binary operations run at the larger of the two operand precisions.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigFloat(DBig);

fn to_ibig(v: &BigInt) -> IBig {
    v.to_string()
        .parse()
        .expect("BigInt renders as a valid integer")
}

fn to_bigint(v: &IBig) -> BigInt {
    v.to_string()
        .parse()
        .expect("IBig renders as a valid integer")
}

impl BigFloat {
    pub fn with_digits(value: DBig, digits: usize) -> Self {
        BigFloat(value.with_precision(digits.max(1)).value())
    }

    pub fn from_rational_digits(r: &Rational, digits: usize) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::PrecisionTooLow(digits));
        }
        let num = DBig::from(to_ibig(r.numer()))
            .with_precision(digits)
            .value();
        let den = DBig::from(to_ibig(r.denom()))
            .with_precision(digits)
            .value();
        Ok(BigFloat(num / den))
    }

    pub fn from_int_digits(v: i64, digits: usize) -> Self {
        BigFloat::with_digits(DBig::from(v), digits)
    }

    pub fn digits(&self) -> usize {
        self.0.precision()
    }

    /// Re-rounds to a new precision.
    pub fn to_digits(&self, digits: usize) -> Self {
        BigFloat::with_digits(self.0.clone(), digits)
    }

    pub fn sqrt(&self) -> Option<Self> {
        if self.0 < DBig::ZERO {
            return None;
        }
        if self.0 == DBig::ZERO {
            return Some(self.clone());
        }
        Some(BigFloat(self.0.sqrt()))
    }

    /// The exact rational value of this float.
    pub fn to_rational(&self) -> Rational {
        let repr = self.0.repr();
        let sig = to_bigint(repr.significand());
        let exp = repr.exponent() as i64;
        let scale = num_traits::pow(BigInt::from(10), exp.unsigned_abs() as usize);
        if exp >= 0 {
            Rational::from_integer(sig * scale)
        } else {
            Rational::new(sig, scale)
        }
    }

    pub fn inner(&self) -> &DBig {
        &self.0
    }

    /// Decimal rendering in fixed or scientific notation, whichever dashu picks.
    pub fn to_decimal_string(&self) -> String {
        self.0.to_string()
    }

    /// `true` when `|self| < bound`.
    pub fn abs_below(&self, bound: &Rational) -> bool {
        let r = self.to_rational();
        let a = if r < Rational::zero() { -r } else { r };
        &a < bound
    }

    fn lift(a: &Self, b: &Self) -> (DBig, DBig) {
        let p = a.digits().max(b.digits()).max(1);
        (
            a.0.clone().with_precision(p).value(),
            b.0.clone().with_precision(p).value(),
        )
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({} @{})", self.0, self.digits())
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat {
                let (a, b) = BigFloat::lift(&self, &rhs);
                BigFloat(a $op b)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat(-self.0)
    }
}

impl Zero for BigFloat {
    fn zero() -> Self {
        BigFloat::from_int_digits(0, DEFAULT_DIGITS)
    }
    fn is_zero(&self) -> bool {
        self.0 == DBig::ZERO
    }
}

impl One for BigFloat {
    fn one() -> Self {
        BigFloat::from_int_digits(1, DEFAULT_DIGITS)
    }
}

impl Scalar for BigFloat {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        BigFloat::from_int_digits(v, DEFAULT_DIGITS)
    }

    fn from_rational(r: &Rational) -> Self {
        BigFloat::from_rational_digits(r, DEFAULT_DIGITS).expect("default precision is valid")
    }

    fn exact_sqrt(&self) -> Option<Self> {
        self.sqrt()
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    fn sign(&self) -> Ordering {
        self.0.partial_cmp(&DBig::ZERO).unwrap_or(Ordering::Equal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{pow10, rat};

    #[test]
    fn third_rounds_to_nearest() {
        let x = BigFloat::from_rational_digits(&rat(2, 3), 20).unwrap();
        assert_eq!(x.to_decimal_string(), "0.66666666666666666667");
        assert_eq!(x.digits(), 20);
    }

    #[test]
    fn sqrt_two_thirty_digits() {
        let two = BigFloat::from_int_digits(2, 30);
        let r = two.sqrt().unwrap();
        assert_eq!(r.to_decimal_string(), "1.41421356237309504880168872421");
    }

    #[test]
    fn rational_round_trip_is_exact_for_terminating_decimals() {
        let x = BigFloat::from_rational_digits(&rat(-5, 8), 20).unwrap();
        assert_eq!(x.to_rational(), rat(-5, 8));
        let big = BigFloat::from_int_digits(123_000, 20);
        assert_eq!(big.to_rational(), rat(123_000, 1));
    }

    #[test]
    fn mixed_precision_takes_the_larger() {
        let a = BigFloat::from_int_digits(1, 50);
        let b = BigFloat::from_int_digits(3, 20);
        let q = a / b;
        assert_eq!(q.digits(), 50);
        let err = q.to_rational() - rat(1, 3);
        assert!(err.abs_below_test(&pow10(50)));
    }

    #[test]
    fn low_precision_rejected() {
        assert_eq!(
            BigFloat::from_rational_digits(&rat(1, 3), 8),
            Err(Error::PrecisionTooLow(8))
        );
    }

    #[test]
    fn negative_has_no_sqrt() {
        assert!(BigFloat::from_int_digits(-4, 20).sqrt().is_none());
        assert!(BigFloat::from_int_digits(0, 20).sqrt().unwrap().is_zero());
    }

    trait AbsBelow {
        fn abs_below_test(&self, b: &Rational) -> bool;
    }
    impl AbsBelow for Rational {
        fn abs_below_test(&self, b: &Rational) -> bool {
            let a = if *self < Rational::zero() {
                -self.clone()
            } else {
                self.clone()
            };
            &a < b
        }
    }
}
