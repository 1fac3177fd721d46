pub mod catalog;
pub mod conditions;
pub mod corollary;
pub mod error;
pub mod exactnum;
pub mod geometry;
pub mod moments;
pub mod scalar;

pub use catalog::{build, Family, FamilyTag};
pub use conditions::{classify, triharmonic_residual, TriharmonicReport, Verdict};
pub use corollary::{
    corollary_crosscheck, f_n_poly, t0, torus_residual_resultant, CorollaryResult,
};
pub use error::{Error, Result};
pub use exactnum::{BigFloat, UniPoly};
pub use geometry::{invariants, Curvature, CurvatureSpectrum, InvariantSet, SpaceForm};
pub use moments::{Derivation, MultiPoly, Ring};
pub use scalar::{Rational, Scalar};

pub type ExactSpectrum = CurvatureSpectrum<Rational>;
pub type ExactSpaceForm = SpaceForm<Rational>;
pub type FloatSpectrum = CurvatureSpectrum<f64>;
pub type FloatSpaceForm = SpaceForm<f64>;
