//! The torus branch in `S^{n+1}`: the cubic `f_n`, its root `t0` in `(0, 2)`,
//! the radius `a^2`, and their consistency with the triharmonic equation.

use serde::Serialize;

use crate::catalog::{build, Family};
use crate::conditions::triharmonic_residual;
use crate::error::{Error, Result};
use crate::exactnum::{
    bracket_certified, isolate_root, resultant_nested, sturm_root_count, BigFloat, IsolatedRoot,
    NestedPoly, UniPoly,
};
use crate::geometry::{invariants, SpaceForm};
use crate::scalar::{int, pow10, Rational, Scalar};

/// Digits carried beyond the requested precision during the crosscheck.
const WORKING_GUARD: usize = 20;

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::DimensionTooSmall(n, 3))
    } else {
        Ok(())
    }
}

/// `n^4 t^3 - 2n^2(n^2-5n+5) t^2 - (n-1)(2n-5)(3n-5) t - (n-1)(n-2)^2`.
pub fn f_n_poly(n: usize) -> Result<UniPoly<Rational>> {
    check_n(n)?;
    let n = n as i64;
    Ok(UniPoly::from_ints(&[
        -(n - 1) * (n - 2) * (n - 2),
        -(n - 1) * (2 * n - 5) * (3 * n - 5),
        -2 * n * n * (n * n - 5 * n + 5),
        n * n * n * n,
    ]))
}

/// `t0` with its certificates.
#[derive(Clone, Debug, PartialEq)]
pub struct RootCertificate {
    /// Distinct roots of `f_n` in `(0, 2)`.
    pub sturm_count: usize,
    pub root: IsolatedRoot,
    /// `f_n` changes sign strictly across the final bracket.
    pub bracket_certified: bool,
}

/// The unique root of `f_n` in `(0, 2)`, bracketed to width below `10^-digits`.
pub fn t0(n: usize, digits: usize) -> Result<RootCertificate> {
    let f = f_n_poly(n)?;
    let (lo, hi) = (int(0), int(2));
    let sturm_count = sturm_root_count(&f, &lo, &hi)?;
    if sturm_count != 1 {
        return Err(Error::RootCount {
            lo: lo.to_string(),
            hi: hi.to_string(),
            count: sturm_count,
        });
    }
    let root = isolate_root(&f, &lo, &hi, digits)?;
    let bracket_certified = bracket_certified(&f, &root);
    Ok(RootCertificate {
        sturm_count,
        root,
        bracket_certified,
    })
}

/// `a^2 = 2(n-1)^2 / (n^2 H^2 + 2n(n-1) + nH sqrt(n^2 H^2 + 4(n-1)))`, at the
/// precision of `h`.
pub fn clifford_a2(n: usize, h: &BigFloat) -> Result<BigFloat> {
    check_n(n)?;
    if h.sign() != std::cmp::Ordering::Greater {
        return Err(Error::NonPositiveMeanCurvature);
    }
    let digits = h.digits();
    let k = |v: i64| BigFloat::from_int_digits(v, digits);
    let ni = n as i64;
    let nh = k(ni) * h.clone();
    let nh2 = nh.clone() * nh.clone();
    let root = (nh2.clone() + k(4 * (ni - 1)))
        .sqrt()
        .expect("positive radicand");
    let den = nh2 + k(2 * ni * (ni - 1)) + nh * root;
    Ok(k(2 * (ni - 1) * (ni - 1)) / den)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorollaryResult {
    pub n: usize,
    pub digits: usize,
    pub working_digits: usize,
    pub t0: String,
    /// Final rational bracket, rendered to `working_digits`.
    pub t0_bracket: [String; 2],
    pub a2: String,
    pub h2_error: String,
    pub residual: String,
    pub tolerance: String,
    pub sturm_unique: bool,
    pub bracket_certified: bool,
}

/// Builds the torus `S^{n-1}(a) x S^1` with `H = sqrt(t0)` and checks that
/// its `H^2` reproduces `t0` and its triharmonic residual vanishes, both
/// below `10^(3-digits)`. Any failure is an error.
pub fn corollary_crosscheck(n: usize, digits: usize) -> Result<CorollaryResult> {
    check_n(n)?;
    let wp = digits.max(crate::exactnum::MIN_DIGITS) + WORKING_GUARD;
    let cert = t0(n, wp)?;
    let mid = (cert.root.lo.clone() + cert.root.hi.clone()) / int(2);
    let t0v = BigFloat::from_rational_digits(&mid, wp)?;
    let h = t0v.sqrt().expect("t0 > 0");
    let a2 = clifford_a2(n, &h)?;

    let sf = SpaceForm::new(n, BigFloat::from_int_digits(1, wp))?;
    let torus = Family::CliffordTorus {
        p: n - 1,
        q: 1,
        a2: a2.clone(),
    };
    let spec = build(&sf, &torus)?;
    let inv = invariants(&sf, &spec)?;
    let residual = triharmonic_residual(&sf, &inv, BigFloat::from_int_digits(0, wp));
    let h2_error = (inv.h2.clone() - t0v.clone()).abs_val();

    let tol = pow10(digits as i64 - 3);
    if !h2_error.abs_below(&tol) {
        return Err(Error::CheckFailed(format!(
            "n = {n}: |H^2 - t0| = {} exceeds 1e{}",
            h2_error.to_decimal_string(),
            3 - digits as i64
        )));
    }
    if !residual.abs_below(&tol) {
        return Err(Error::CheckFailed(format!(
            "n = {n}: torus residual {} exceeds 1e{}",
            residual.to_decimal_string(),
            3 - digits as i64
        )));
    }
    let render = |r: &Rational| -> Result<String> {
        Ok(BigFloat::from_rational_digits(r, wp)?.to_decimal_string())
    };
    Ok(CorollaryResult {
        n,
        digits,
        working_digits: wp,
        t0: t0v.to_digits(digits.max(1)).to_decimal_string(),
        t0_bracket: [render(&cert.root.lo)?, render(&cert.root.hi)?],
        a2: a2.to_digits(digits.max(1)).to_decimal_string(),
        h2_error: h2_error.to_digits(6).to_decimal_string(),
        residual: residual.abs_val().to_digits(6).to_decimal_string(),
        tolerance: format!("1e{}", 3 - digits as i64),
        sturm_unique: cert.sturm_count == 1,
        bracket_certified: cert.bracket_certified,
    })
}

/// Outcome of eliminating the torus radius.
#[derive(Clone, Debug, PartialEq)]
pub struct ResultantVerdict {
    pub n: usize,
    /// `Res_u(p1, p2)` as a polynomial in `h = H^2`.
    pub resultant: UniPoly<Rational>,
    pub divisor: UniPoly<Rational>,
    pub divisible: bool,
    /// `resultant / divisor` when divisible: the extraneous factor.
    pub quotient: Option<UniPoly<Rational>>,
}

/// `p1(u, h)`: `u^2 (S^2 - nS - n^2 h)` with `S = (n-1)u + 1/u`, and
/// `p2(u, h)`: `u (n^2 h - ((n-1)^2 u + 1/u - 2(n-1)))`. Outer index is the
/// power of `u`, inner polynomials are in `h`.
pub fn torus_system(n: usize) -> Result<(NestedPoly<Rational>, NestedPoly<Rational>)> {
    check_n(n)?;
    let n = n as i64;
    let k = |v: i64| UniPoly::constant(int(v));
    let n2h = UniPoly::monomial(int(n * n), 1);
    let p1 = vec![
        k(1),
        k(-n),
        &k(2 * (n - 1)) - &n2h,
        k(-n * (n - 1)),
        k((n - 1) * (n - 1)),
    ];
    let p2 = vec![k(-1), &n2h + &k(2 * (n - 1)), k(-(n - 1) * (n - 1))];
    Ok((p1, p2))
}

/// Eliminates `u` and tests divisibility by `divisor`.
pub fn torus_resultant_against(n: usize, divisor: &UniPoly<Rational>) -> Result<ResultantVerdict> {
    let (p1, p2) = torus_system(n)?;
    let res = resultant_nested(&p1, &p2)?;
    let (q, r) = res.div_rem(divisor)?;
    let divisible = r.is_zero() && !res.is_zero();
    Ok(ResultantVerdict {
        n,
        resultant: res,
        divisor: divisor.clone(),
        divisible,
        quotient: divisible.then_some(q),
    })
}

/// [`torus_resultant_against`] with `f_n`.
pub fn torus_residual_resultant(n: usize) -> Result<ResultantVerdict> {
    torus_resultant_against(n, &f_n_poly(n)?)
}
