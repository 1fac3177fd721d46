//! The CMC triharmonic characterization evaluated on constant spectra.
//!
//! A CMC hypersurface is triharmonic iff
//! `H (dS + S^2 - ncS - n^2 c H^2) = 0` and `H A grad S = 0`.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{invariants, CurvatureSpectrum, InvariantSet, SpaceForm};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Minimal,
    ProperTriharmonic,
    NotTriharmonic,
}

impl Verdict {
    /// Short form accepted by `--expect`.
    pub fn short(self) -> &'static str {
        match self {
            Verdict::Minimal => "minimal",
            Verdict::ProperTriharmonic => "proper",
            Verdict::NotTriharmonic => "not",
        }
    }

    pub fn parse_short(s: &str) -> Option<Self> {
        [
            Verdict::Minimal,
            Verdict::ProperTriharmonic,
            Verdict::NotTriharmonic,
        ]
        .into_iter()
        .find(|v| v.short() == s || v.to_string() == s)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Minimal => "Minimal",
            Verdict::ProperTriharmonic => "ProperTriharmonic",
            Verdict::NotTriharmonic => "NotTriharmonic",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TriharmonicReport<T> {
    /// `dS + S^2 - ncS - n^2 c H^2`.
    pub t1: T,
    /// `A grad S = 0`; vacuous for constant `S`.
    pub t2_satisfied: bool,
    pub verdict: Verdict,
    pub invariants: InvariantSet<T>,
}

/// `delta_s + S^2 - n c S - n^2 c H^2`.
pub fn triharmonic_residual<T: Scalar>(sf: &SpaceForm<T>, inv: &InvariantSet<T>, delta_s: T) -> T {
    let n = sf.n_scalar();
    let c = sf.c().clone();
    delta_s + inv.s.clone() * inv.s.clone()
        - n.clone() * c.clone() * inv.s.clone()
        - n.clone() * n * c * inv.h2.clone()
}

/// Classifies a constant-curvature spectrum. `dS = 0` and `A grad S = 0` hold
/// automatically, so only the first equation is evaluated, and only when `H != 0`.
pub fn classify<T: Scalar>(
    sf: &SpaceForm<T>,
    spec: &CurvatureSpectrum<T>,
) -> Result<TriharmonicReport<T>> {
    let inv = invariants(sf, spec)?;
    if T::EXACT {
        // trace Cauchy-Schwarz: S >= n H^2
        debug_assert!(inv.s >= sf.n_scalar() * inv.h2.clone());
    }
    let t1 = triharmonic_residual(sf, &inv, T::zero());
    let verdict = if inv.h2.sign() == Ordering::Equal {
        Verdict::Minimal
    } else if t1.is_zero() {
        Verdict::ProperTriharmonic
    } else {
        Verdict::NotTriharmonic
    };
    Ok(TriharmonicReport {
        t1,
        t2_satisfied: true,
        verdict,
        invariants: inv,
    })
}
