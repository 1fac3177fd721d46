//! The scalar abstraction every numeric layer is written against.
//!
//! Exact work runs over [`Rational`]; working-precision work over
//! [`BigFloat`](crate::BigFloat); quick sampling over `f64`/`f32`.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational.
pub type Rational = BigRational;

/// An ordered field element.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// `true` when arithmetic never rounds.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    fn from_rational(r: &Rational) -> Self;

    /// Square root of a nonnegative value when it is representable.
    ///
    /// Exact types return `None` for non-squares; rounding types always
    /// return their best approximation. Negative inputs give `None`.
    fn exact_sqrt(&self) -> Option<Self>;

    fn to_f64(&self) -> f64;

    fn sign(&self) -> Ordering {
        self.partial_cmp(&Self::zero()).unwrap_or(Ordering::Equal)
    }

    fn abs_val(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn powu(&self, e: u32) -> Self {
        num_traits::pow(self.clone(), e as usize)
    }

    fn from_usize(v: usize) -> Self {
        Self::from_int(v as i64)
    }
}

/// `r` as an exact rational if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn exact_sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_int(v: i64) -> Self {
                v as $t
            }

            fn from_rational(r: &Rational) -> Self {
                ToPrimitive::to_f64(r).unwrap_or(f64::NAN) as $t
            }

            fn exact_sqrt(&self) -> Option<Self> {
                (*self >= 0.0).then(|| self.sqrt())
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

/// Parses `p/q` or `p` into a rational. Decimal notation is rejected.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let ok = !s.is_empty()
        && s.chars()
            .all(|ch| ch.is_ascii_digit() || ch == '/' || ch == '-' || ch == '+');
    if !ok {
        return None;
    }
    let r: Rational = s.parse().ok()?;
    Some(r)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact `10^(-k)` for k >= 0, and `10^|k|` otherwise.
pub fn pow10(k: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), k.unsigned_abs() as usize);
    if k >= 0 {
        Rational::new(BigInt::one(), p)
    } else {
        Rational::from_integer(p)
    }
}
