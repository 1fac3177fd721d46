//! Power matrices `M[i][j] = x_j^(e_i)`, their determinants and factorizations.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Determinant by Gaussian elimination with nonzero pivoting. Exact over
/// exact scalars.
pub fn determinant<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let k = m.len();
    let mut det = T::one();
    for col in 0..k {
        let Some(piv) = (col..k).find(|&r| !m[r][col].is_zero()) else {
            return T::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        for r in col + 1..k {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / p.clone();
            let (top, rest) = m.split_at_mut(r);
            for (x, y) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
    }
    det
}

/// Solves `a x = b` for square nonsingular `a`. `None` if singular.
pub fn solve_linear<T: Scalar>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Option<Vec<T>> {
    let k = a.len();
    for col in 0..k {
        let piv = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(piv, col);
        b.swap(piv, col);
        let pivot = a[col].clone();
        for r in 0..k {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / pivot[col].clone();
            for (x, y) in a[r][col..].iter_mut().zip(&pivot[col..]) {
                *x = x.clone() - factor.clone() * y.clone();
            }
            let v = b[r].clone() - factor * b[col].clone();
            b[r] = v;
        }
    }
    Some((0..k).map(|i| b[i].clone() / a[i][i].clone()).collect())
}

/// The matrix `M[i][j] = values[j]^powers[i]`.
pub fn power_matrix<T: Scalar>(values: &[T], powers: &[u32]) -> Vec<Vec<T>> {
    powers
        .iter()
        .map(|&e| values.iter().map(|x| x.powu(e)).collect())
        .collect()
}

/// `det M` with `M[i][j] = values[j]^powers[i]`.
pub fn vandermonde_det<T: Scalar>(values: &[T], powers: &[u32]) -> Result<T> {
    if values.len() != powers.len() {
        return Err(Error::LengthMismatch(values.len(), powers.len()));
    }
    Ok(determinant(power_matrix(values, powers)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VandermondeMode {
    /// Powers `1, 3, ..., 2k-1`.
    Odd,
    /// Powers `1, 2, ..., k`.
    Consecutive,
}

impl VandermondeMode {
    pub fn powers(self, k: usize) -> Vec<u32> {
        match self {
            VandermondeMode::Odd => (0..k as u32).map(|i| 2 * i + 1).collect(),
            VandermondeMode::Consecutive => (1..=k as u32).collect(),
        }
    }
}

/// `(prod x) prod_{a<b} (g(x_b) - g(x_a))` with `g = x^2` (odd) or `g = x`.
pub fn vandermonde_product<T: Scalar>(values: &[T], mode: VandermondeMode) -> T {
    let g = |x: &T| match mode {
        VandermondeMode::Odd => x.clone() * x.clone(),
        VandermondeMode::Consecutive => x.clone(),
    };
    let mut acc = values.iter().fold(T::one(), |a, x| a * x.clone());
    for b in 0..values.len() {
        for a in 0..b {
            acc = acc * (g(&values[b]) - g(&values[a]));
        }
    }
    acc
}

/// Determinant equals the factorized product, exactly.
pub fn vandermonde_identity_check<T: Scalar>(values: &[T], mode: VandermondeMode) -> bool {
    let det = determinant(power_matrix(values, &mode.powers(values.len())));
    det == vandermonde_product(values, mode)
}

/// `true` iff some value is zero or two values collide under the mode's map.
pub fn is_degenerate<T: Scalar>(values: &[T], mode: VandermondeMode) -> bool {
    let key = |x: &T| match mode {
        VandermondeMode::Odd => x.clone() * x.clone(),
        VandermondeMode::Consecutive => x.clone(),
    };
    values.iter().any(|x| x.is_zero())
        || (0..values.len()).any(|b| (0..b).any(|a| key(&values[a]) == key(&values[b])))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub cases: usize,
    pub degenerate: usize,
    pub failures: usize,
    /// First failing tuple, rendered.
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// A small random rational; some draws reuse or negate an earlier value so
/// degenerate tuples occur regularly.
fn draw(rng: &mut ChaCha8Rng, earlier: &[Rational]) -> Rational {
    if !earlier.is_empty() && rng.gen_ratio(1, 8) {
        let x = earlier[rng.gen_range(0..earlier.len())].clone();
        return if rng.gen_bool(0.5) { x } else { -x };
    }
    Rational::new(
        rng.gen_range(-20i64..=20).into(),
        rng.gen_range(1i64..=9).into(),
    )
}

pub fn random_tuple(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    let mut v = Vec::with_capacity(k);
    for _ in 0..k {
        let x = draw(rng, &v);
        v.push(x);
    }
    v
}

/// Checks the identity and the zero locus on `cases` random tuples with
/// `1 <= k <= max_k`, in both modes. Deterministic for a given seed.
pub fn vandermonde_random_suite(cases: usize, max_k: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteOutcome {
        cases,
        degenerate: 0,
        failures: 0,
        first_failure: None,
    };
    for _ in 0..cases {
        let k = rng.gen_range(1..=max_k.max(1));
        let values = random_tuple(&mut rng, k);
        let mut any_degenerate = false;
        for mode in [VandermondeMode::Odd, VandermondeMode::Consecutive] {
            let det = determinant(power_matrix(&values, &mode.powers(k)));
            let degenerate = is_degenerate(&values, mode);
            any_degenerate |= degenerate;
            let ok = det == vandermonde_product(&values, mode) && det.is_zero() == degenerate;
            if !ok {
                out.failures += 1;
                if out.first_failure.is_none() {
                    let shown: Vec<String> = values.iter().map(|x| x.to_string()).collect();
                    out.first_failure = Some(format!("{mode:?} ({})", shown.join(", ")));
                }
            }
        }
        out.degenerate += any_degenerate as usize;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    /// Leibniz expansion over all permutations.
    fn leibniz(m: &[Vec<Rational>]) -> Rational {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        let k = m.len();
        perms(k)
            .into_iter()
            .map(|p| {
                let inversions = (0..k)
                    .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let prod = (0..k).fold(int(1), |a, i| a * m[i][p[i]].clone());
                if inversions % 2 == 0 {
                    prod
                } else {
                    -prod
                }
            })
            .fold(int(0), |a, b| a + b)
    }

    #[test]
    fn quoted_determinants() {
        assert_eq!(vandermonde_det(&[int(1), int(2)], &[1, 3]).unwrap(), int(6));
        assert_eq!(
            vandermonde_det(&[int(1), int(2), int(3)], &[1, 2, 3]).unwrap(),
            int(12)
        );
        assert_eq!(
            vandermonde_det(&[int(4), rat(1, 3), int(4)], &[1, 2, 5]).unwrap(),
            int(0)
        );
        assert!(vandermonde_det(&[int(1)], &[1, 2]).is_err());
    }

    #[test]
    fn identity_examples() {
        assert!(vandermonde_identity_check(
            &[int(1), int(2)],
            VandermondeMode::Odd
        ));
        let pair = [rat(1, 2), rat(-1, 2)];
        assert!(vandermonde_identity_check(&pair, VandermondeMode::Odd));
        assert_eq!(
            vandermonde_det(&pair, &VandermondeMode::Odd.powers(2)).unwrap(),
            int(0)
        );
    }

    #[test]
    fn elimination_matches_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let k = rng.gen_range(1..=5);
            let values = random_tuple(&mut rng, k);
            let powers: Vec<u32> = (0..k).map(|_| rng.gen_range(0..7)).collect();
            let m = power_matrix(&values, &powers);
            assert_eq!(determinant(m.clone()), leibniz(&m));
        }
    }

    #[test]
    fn random_suite_passes_and_hits_degenerate_cases() {
        let out = vandermonde_random_suite(1000, 6, 2024);
        assert!(out.passed(), "{out:?}");
        assert!(out.degenerate > 50);
        assert_eq!(out, vandermonde_random_suite(1000, 6, 2024));
    }

    #[test]
    fn linear_solve() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        assert_eq!(
            solve_linear(a, vec![int(3), int(5)]),
            Some(vec![rat(4, 5), rat(7, 5)])
        );
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve_linear(singular, vec![int(0), int(1)]), None);
    }
}
