//! Exact arithmetic substrate: rationals, univariate polynomials, Sturm
//! counting, bisection, resultants and double factorials.

mod bigfloat;
mod resultant;
mod roots;
mod unipoly;

pub use bigfloat::{BigFloat, DEFAULT_DIGITS, MIN_DIGITS};
pub use resultant::{bareiss_det, resultant, resultant_nested, sylvester_matrix, NestedPoly};
pub use roots::{
    bracket_certified, isolate_root, primitive_integer_form, sign_variations, sturm_root_count,
    sturm_sequence, IsolatedRoot,
};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// `k!! = k (k-2) (k-4) ...`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(k: i64) -> Result<BigInt> {
    if k < -1 {
        return Err(Error::NegativeDoubleFactorial(k));
    }
    let mut acc = BigInt::one();
    let mut i = k;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    #[test]
    fn small_values() {
        assert_eq!(double_factorial(5).unwrap(), BigInt::from(15));
        assert_eq!(double_factorial(6).unwrap(), BigInt::from(48));
        assert_eq!(double_factorial(-1).unwrap(), BigInt::from(1));
        assert_eq!(double_factorial(0).unwrap(), BigInt::from(1));
        assert_eq!(
            double_factorial(-2),
            Err(Error::NegativeDoubleFactorial(-2))
        );
    }

    #[test]
    fn ratio_matches_sixth_moment_coefficient() {
        let r = Rational::new(double_factorial(5).unwrap(), double_factorial(6).unwrap());
        assert_eq!(r, rat(5, 16));
    }

    #[test]
    fn recursive_definition() {
        for k in 1..60 {
            assert_eq!(
                double_factorial(k).unwrap(),
                BigInt::from(k) * double_factorial(k - 2).unwrap()
            );
        }
    }
}
