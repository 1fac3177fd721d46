//! Sylvester resultants with polynomial coefficients, by fraction-free
//! (Bareiss) elimination.

use super::unipoly::UniPoly;
use crate::error::Result;
use crate::scalar::Scalar;

/// A polynomial in an outer variable whose coefficients are polynomials in an
/// inner one: `coeffs[i]` multiplies `u^i`.
pub type NestedPoly<T> = Vec<UniPoly<T>>;

fn trim<T: Scalar>(p: &[UniPoly<T>]) -> &[UniPoly<T>] {
    let mut n = p.len();
    while n > 0 && p[n - 1].is_zero() {
        n -= 1;
    }
    &p[..n]
}

/// The Sylvester matrix of `p` (degree m) and `q` (degree k): k shifted rows of
/// `p` followed by m shifted rows of `q`, highest power first.
pub fn sylvester_matrix<T: Scalar>(p: &[UniPoly<T>], q: &[UniPoly<T>]) -> Vec<Vec<UniPoly<T>>> {
    let (p, q) = (trim(p), trim(q));
    let m = p.len().saturating_sub(1);
    let k = q.len().saturating_sub(1);
    let size = m + k;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..k {
        let mut row = vec![UniPoly::zero(); size];
        for (j, c) in p.iter().rev().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![UniPoly::zero(); size];
        for (j, c) in q.iter().rev().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant of a square matrix over `T[x]` by Bareiss elimination.
/// Every intermediate division is exact; a failure there is a bug, not an input error.
pub fn bareiss_det<T: Scalar>(mut a: Vec<Vec<UniPoly<T>>>) -> Result<UniPoly<T>> {
    let n = a.len();
    if n == 0 {
        return Ok(UniPoly::constant(T::one()));
    }
    let mut negate = false;
    let mut prev = UniPoly::constant(T::one());
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(UniPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = UniPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// `Res_u(p, q)` as a polynomial in the inner variable.
pub fn resultant_nested<T: Scalar>(p: &[UniPoly<T>], q: &[UniPoly<T>]) -> Result<UniPoly<T>> {
    bareiss_det(sylvester_matrix(p, q))
}

/// Resultant of two polynomials with scalar coefficients.
pub fn resultant<T: Scalar>(p: &UniPoly<T>, q: &UniPoly<T>) -> Result<T> {
    let lift = |x: &UniPoly<T>| -> NestedPoly<T> {
        x.coeffs()
            .iter()
            .map(|c| UniPoly::constant(c.clone()))
            .collect()
    };
    Ok(resultant_nested(&lift(p), &lift(q))?.coeff(0))
}
