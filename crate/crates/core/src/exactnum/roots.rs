//! Real-root counting (Sturm) and bisection refinement over exact rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bigfloat::{BigFloat, MIN_DIGITS};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};
use crate::scalar::{pow10, Rational, Scalar};

/// Guard digits added on top of the requested precision when rendering a root.
const GUARD_DIGITS: usize = 10;

/// The signed remainder sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence(p: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    let mut seq = vec![p.clone()];
    if p.degree().unwrap_or(0) == 0 {
        return seq;
    }
    seq.push(p.derivative());
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2]
            .div_rem(&seq[n - 1])
            .expect("sequence members are nonzero");
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

/// Sign changes of the sequence at `x`, zeros skipped.
pub fn sign_variations(seq: &[UniPoly<Rational>], x: &Rational) -> usize {
    let signs: Vec<Ordering> = seq
        .iter()
        .map(|p| p.eval(x).sign())
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Lower bound on the distance from a root `x0` of square-free `p` to any other root.
fn root_gap_bound(p: &UniPoly<Rational>, x0: &Rational) -> Rational {
    let linear = UniPoly::new(vec![-x0.clone(), Rational::one()]);
    let rest = p.exact_div(&linear).expect("x0 is a root");
    let shifted = rest.taylor_shift(x0);
    let g0 = shifted.coeff(0).abs_val();
    let gmax = shifted
        .coeffs()
        .iter()
        .skip(1)
        .map(|c| c.abs_val())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    if gmax.is_zero() {
        // no other roots at all
        return Rational::one();
    }
    g0.clone() / (g0 + gmax)
}

/// Moves a root endpoint inward by `width / 2^k`, `k >= 1` minimal with the step
/// below the root-gap bound, so the open interval keeps exactly the same roots.
fn clear_endpoint(sf: &UniPoly<Rational>, at: &Rational, width: &Rational) -> Rational {
    let bound = root_gap_bound(sf, at);
    let mut step = width.clone() / Rational::from_int(2);
    while step >= bound {
        step /= Rational::from_int(2);
    }
    step
}

struct Prepared {
    sf: UniPoly<Rational>,
    lo: Rational,
    hi: Rational,
    count: usize,
}

fn prepare(p: &UniPoly<Rational>, lo: &Rational, hi: &Rational) -> Result<Prepared> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval {
            lo: lo.to_string(),
            hi: hi.to_string(),
        });
    }
    let sf = p.square_free();
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    if sf.degree() == Some(0) {
        return Ok(Prepared {
            sf,
            lo,
            hi,
            count: 0,
        });
    }
    if sf.eval(&lo).is_zero() {
        let step = clear_endpoint(&sf, &lo, &(hi.clone() - lo.clone()));
        lo += step;
    }
    if sf.eval(&hi).is_zero() {
        let step = clear_endpoint(&sf, &hi, &(hi.clone() - lo.clone()));
        hi -= step;
    }
    let seq = sturm_sequence(&sf);
    let count = sign_variations(&seq, &lo) - sign_variations(&seq, &hi);
    Ok(Prepared { sf, lo, hi, count })
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_root_count(p: &UniPoly<Rational>, lo: &Rational, hi: &Rational) -> Result<usize> {
    prepare(p, lo, hi).map(|pr| pr.count)
}

/// Result of bisection: a rational bracket and its decimal rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedRoot {
    /// Left end of the final bracket.
    pub lo: Rational,
    /// Right end; equal to `lo` when bisection landed on an exact rational root.
    pub hi: Rational,
    pub value: BigFloat,
    pub digits: usize,
}

impl IsolatedRoot {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        self.hi.clone() - self.lo.clone()
    }
}

/// Refines the unique root of `p` in `(lo, hi)` by bisection until the bracket
/// is narrower than `10^-digits`.
///
/// Signs are evaluated on the square-free part, so a bracket always straddles
/// a sign change even for roots of even multiplicity.
pub fn isolate_root(
    p: &UniPoly<Rational>,
    lo: &Rational,
    hi: &Rational,
    digits: usize,
) -> Result<IsolatedRoot> {
    if digits == 0 {
        return Err(Error::PrecisionTooLow(digits));
    }
    let pr = prepare(p, lo, hi)?;
    if pr.count != 1 {
        return Err(Error::RootCount {
            lo: lo.to_string(),
            hi: hi.to_string(),
            count: pr.count,
        });
    }
    let tol = pow10(digits as i64);
    let (mut a, mut b) = (pr.lo, pr.hi);
    let sa = pr.sf.eval(&a).sign();
    let two = Rational::from_int(2);
    let mut exact = false;
    while b.clone() - a.clone() >= tol {
        let m = (a.clone() + b.clone()) / two.clone();
        let sm = pr.sf.eval(&m).sign();
        if sm == Ordering::Equal {
            a = m.clone();
            b = m;
            exact = true;
            break;
        }
        if sm == sa {
            a = m;
        } else {
            b = m;
        }
    }
    let mid = if exact {
        a.clone()
    } else {
        (a.clone() + b.clone()) / two
    };
    let prec = digits.max(MIN_DIGITS) + GUARD_DIGITS + magnitude_digits(&mid);
    let value = BigFloat::from_rational_digits(&mid, prec)?;
    Ok(IsolatedRoot {
        lo: a,
        hi: b,
        value,
        digits,
    })
}

/// Number of decimal digits before the point, 0 for |x| < 1.
fn magnitude_digits(x: &Rational) -> usize {
    let t = x.abs_val().to_integer();
    if t.is_zero() {
        0
    } else {
        t.magnitude().to_string().len()
    }
}

/// `true` when `p` changes sign across the bracket, or vanishes exactly on a
/// collapsed bracket. Uses the square-free part.
pub fn bracket_certified(p: &UniPoly<Rational>, root: &IsolatedRoot) -> bool {
    let sf = p.square_free();
    if root.is_exact() {
        return sf.eval(&root.lo).is_zero();
    }
    let sl = sf.eval(&root.lo).sign();
    let sh = sf.eval(&root.hi).sign();
    sl != Ordering::Equal && sh != Ordering::Equal && sl != sh
}

/// Integer scaled copy with the content removed: useful for display.
pub fn primitive_integer_form(p: &UniPoly<Rational>) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c.clone() * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    type P = UniPoly<Rational>;

    #[test]
    fn no_real_roots() {
        let p = P::from_ints(&[1, 0, 1]);
        assert_eq!(sturm_root_count(&p, &int(-10), &int(10)).unwrap(), 0);
    }

    #[test]
    fn double_root_counts_once() {
        let p = P::from_ints(&[1, -2, 1]);
        assert_eq!(sturm_root_count(&p, &int(0), &int(2)).unwrap(), 1);
    }

    #[test]
    fn f3_has_one_root_in_zero_two() {
        let p = P::from_ints(&[-2, -8, 18, 81]);
        assert_eq!(sturm_root_count(&p, &int(0), &int(2)).unwrap(), 1);
    }

    #[test]
    fn endpoint_roots_are_excluded() {
        // roots 0, 1, 2 ; open interval (0, 2) holds only 1
        let p = &(&P::from_ints(&[0, 1]) * &P::from_ints(&[-1, 1])) * &P::from_ints(&[-2, 1]);
        assert_eq!(sturm_root_count(&p, &int(0), &int(2)).unwrap(), 1);
        assert_eq!(sturm_root_count(&p, &int(0), &int(1)).unwrap(), 0);
        assert_eq!(sturm_root_count(&p, &rat(-1, 2), &int(1)).unwrap(), 1);
    }

    #[test]
    fn close_root_next_to_endpoint_survives_shrinking() {
        // roots 0 and 1/1000, interval (0, 1)
        let p = &P::from_ints(&[0, 1]) * &P::new(vec![rat(-1, 1000), int(1)]);
        assert_eq!(sturm_root_count(&p, &int(0), &int(1)).unwrap(), 1);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            sturm_root_count(&P::zero(), &int(0), &int(1)),
            Err(Error::ZeroPolynomial)
        );
        assert!(matches!(
            sturm_root_count(&P::from_ints(&[1, 1]), &int(1), &int(0)),
            Err(Error::EmptyInterval { .. })
        ));
    }

    #[test]
    fn rational_root_collapses_bracket() {
        let p = P::new(vec![rat(-1, 2), int(1)]);
        let r = isolate_root(&p, &int(0), &int(2), 20).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.lo, rat(1, 2));
        assert_eq!(r.value.to_rational(), rat(1, 2));
        assert!(bracket_certified(&p, &r));
    }

    #[test]
    fn sqrt_two_to_thirty_digits() {
        let p = P::from_ints(&[-2, 0, 1]);
        let r = isolate_root(&p, &int(0), &int(2), 30).unwrap();
        assert!(r.width() < pow10(30));
        let s = r.value.to_decimal_string();
        assert!(s.starts_with("1.414213562373095048801688724209"), "{s}");
        assert!(bracket_certified(&p, &r));
    }

    #[test]
    fn isolate_requires_a_unique_root() {
        let p = P::from_ints(&[-1, 0, 1]);
        assert!(matches!(
            isolate_root(&p, &int(-2), &int(2), 20),
            Err(Error::RootCount { count: 2, .. })
        ));
    }

    #[test]
    fn primitive_form_drops_content() {
        let p = P::new(vec![rat(1, 2), rat(3, 4)]);
        assert_eq!(
            primitive_integer_form(&p),
            vec![BigInt::from(2), BigInt::from(3)]
        );
    }
}
