//! Classical isoparametric hypersurfaces in the three space forms, given by
//! their principal-curvature spectra.
//!
//! Spheres are parametrized by `r^2` and tori by `a^2` so every invariant is a
//! rational function of rational parameters. Hyperbolic families take the
//! curvature value `lambda` directly. The unit normal is chosen so that
//! small spheres, Euclidean spheres and the first torus factor have positive
//! curvature.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Curvature, CurvatureSpectrum, SpaceForm};
use crate::scalar::{parse_rational, Rational, Scalar};

/// Family names as they appear on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    SmallSphere,
    CliffordTorus,
    EuclideanSphere,
    SphericalCylinder,
    GeodesicSphereH,
    HorosphereH,
    EquidistantH,
    HyperbolicCylinder,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 8] = [
        FamilyTag::SmallSphere,
        FamilyTag::CliffordTorus,
        FamilyTag::EuclideanSphere,
        FamilyTag::SphericalCylinder,
        FamilyTag::GeodesicSphereH,
        FamilyTag::HorosphereH,
        FamilyTag::EquidistantH,
        FamilyTag::HyperbolicCylinder,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            FamilyTag::SmallSphere => "small-sphere",
            FamilyTag::CliffordTorus => "clifford",
            FamilyTag::EuclideanSphere => "sphere",
            FamilyTag::SphericalCylinder => "cylinder",
            FamilyTag::GeodesicSphereH => "geodesic-sphere",
            FamilyTag::HorosphereH => "horosphere",
            FamilyTag::EquidistantH => "equidistant",
            FamilyTag::HyperbolicCylinder => "hcylinder",
        }
    }

    /// Parameter keys, in the order they are reported.
    pub fn keys(self) -> &'static [&'static str] {
        match self {
            FamilyTag::SmallSphere => &["r2"],
            FamilyTag::CliffordTorus => &["p", "q", "a2"],
            FamilyTag::EuclideanSphere => &["r"],
            FamilyTag::SphericalCylinder => &["p", "r"],
            FamilyTag::GeodesicSphereH | FamilyTag::EquidistantH => &["lambda"],
            FamilyTag::HorosphereH => &[],
            FamilyTag::HyperbolicCylinder => &["p", "lambda"],
        }
    }

    /// Required ambient curvature.
    pub fn curvature(self) -> i64 {
        match self {
            FamilyTag::SmallSphere | FamilyTag::CliffordTorus => 1,
            FamilyTag::EuclideanSphere | FamilyTag::SphericalCylinder => 0,
            _ => -1,
        }
    }

    pub fn is_integer_key(key: &str) -> bool {
        matches!(key, "p" | "q" | "n")
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.cli_name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

/// A family member with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Family<T> {
    /// `S^n(r)` in `S^{n+1}`, `0 < r^2 < 1`.
    SmallSphere {
        r2: T,
    },
    /// `S^p(a) x S^q(sqrt(1 - a^2))` in `S^{n+1}`, `0 < a^2 < 1`.
    CliffordTorus {
        p: usize,
        q: usize,
        a2: T,
    },
    /// Round sphere of radius `r` in `R^{n+1}`.
    EuclideanSphere {
        r: T,
    },
    /// `S^p(r) x R^{n-p}` in `R^{n+1}`.
    SphericalCylinder {
        p: usize,
        r: T,
    },
    /// Geodesic sphere in `H^{n+1}`, curvature `lambda > 1`.
    GeodesicSphereH {
        lambda: T,
    },
    HorosphereH,
    /// Equidistant hypersurface in `H^{n+1}`, `0 < lambda < 1`.
    EquidistantH {
        lambda: T,
    },
    /// `S^p x H^{n-p}` in `H^{n+1}`: curvatures `lambda` and `1/lambda`.
    HyperbolicCylinder {
        p: usize,
        lambda: T,
    },
}

fn out_of_range(key: &str, reason: impl Into<String>) -> Error {
    Error::ParameterOutOfRange {
        key: key.into(),
        reason: reason.into(),
    }
}

fn open_unit<T: Scalar>(key: &str, v: &T) -> Result<()> {
    if v.sign() != Ordering::Greater || *v >= T::one() {
        return Err(out_of_range(key, format!("{v} not in (0, 1)")));
    }
    Ok(())
}

fn positive<T: Scalar>(key: &str, v: &T) -> Result<()> {
    if v.sign() != Ordering::Greater {
        return Err(out_of_range(key, format!("{v} must be positive")));
    }
    Ok(())
}

fn above_one<T: Scalar>(key: &str, v: &T) -> Result<()> {
    if *v <= T::one() {
        return Err(out_of_range(key, format!("{v} must exceed 1")));
    }
    Ok(())
}

fn split(key: &str, p: usize, n: usize) -> Result<()> {
    if p == 0 || p >= n {
        return Err(out_of_range(key, format!("{p} not in 1..={}", n - 1)));
    }
    Ok(())
}

impl<T: Scalar> Family<T> {
    pub fn tag(&self) -> FamilyTag {
        match self {
            Family::SmallSphere { .. } => FamilyTag::SmallSphere,
            Family::CliffordTorus { .. } => FamilyTag::CliffordTorus,
            Family::EuclideanSphere { .. } => FamilyTag::EuclideanSphere,
            Family::SphericalCylinder { .. } => FamilyTag::SphericalCylinder,
            Family::GeodesicSphereH { .. } => FamilyTag::GeodesicSphereH,
            Family::HorosphereH => FamilyTag::HorosphereH,
            Family::EquidistantH { .. } => FamilyTag::EquidistantH,
            Family::HyperbolicCylinder { .. } => FamilyTag::HyperbolicCylinder,
        }
    }

    /// Parameters as `(key, rendered value)` in the tag's key order.
    pub fn params(&self) -> Vec<(String, String)> {
        let kv = |k: &str, v: String| (k.to_string(), v);
        match self {
            Family::SmallSphere { r2 } => vec![kv("r2", r2.to_string())],
            Family::CliffordTorus { p, q, a2 } => vec![
                kv("p", p.to_string()),
                kv("q", q.to_string()),
                kv("a2", a2.to_string()),
            ],
            Family::EuclideanSphere { r } => vec![kv("r", r.to_string())],
            Family::SphericalCylinder { p, r } => {
                vec![kv("p", p.to_string()), kv("r", r.to_string())]
            }
            Family::GeodesicSphereH { lambda } | Family::EquidistantH { lambda } => {
                vec![kv("lambda", lambda.to_string())]
            }
            Family::HorosphereH => vec![],
            Family::HyperbolicCylinder { p, lambda } => {
                vec![kv("p", p.to_string()), kv("lambda", lambda.to_string())]
            }
        }
    }

    /// Checks the parameter ranges against dimension `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            Family::SmallSphere { r2 } => open_unit("r2", r2),
            Family::CliffordTorus { p, q, a2 } => {
                if *p == 0 || *q == 0 || p + q != n {
                    return Err(out_of_range(
                        "p,q",
                        format!("need p, q >= 1 with p + q = n = {n}, got {p} + {q}"),
                    ));
                }
                open_unit("a2", a2)
            }
            Family::EuclideanSphere { r } => positive("r", r),
            Family::SphericalCylinder { p, r } => {
                split("p", *p, n)?;
                positive("r", r)
            }
            Family::GeodesicSphereH { lambda } => above_one("lambda", lambda),
            Family::HorosphereH => Ok(()),
            Family::EquidistantH { lambda } => open_unit("lambda", lambda),
            Family::HyperbolicCylinder { p, lambda } => {
                split("p", *p, n)?;
                above_one("lambda", lambda)
            }
        }
    }
}

impl Family<Rational> {
    /// Builds a family from CLI-style `key=value` parameters. Values are exact
    /// rationals written `p/q` or integers.
    pub fn from_params(tag: FamilyTag, params: &BTreeMap<String, String>) -> Result<Self> {
        for key in params.keys() {
            if !tag.keys().contains(&key.as_str()) {
                return Err(Error::UnknownParameter(key.clone()));
            }
        }
        let rational = |key: &str| -> Result<Rational> {
            let raw = params
                .get(key)
                .ok_or_else(|| Error::MissingParameter(key.to_string()))?;
            parse_rational(raw).ok_or_else(|| Error::MalformedValue {
                key: key.to_string(),
                value: raw.clone(),
            })
        };
        let integer = |key: &str| -> Result<usize> {
            let v = rational(key)?;
            let bad = || Error::MalformedValue {
                key: key.to_string(),
                value: params[key].clone(),
            };
            if !v.is_integer() || v < Rational::zero() {
                return Err(bad());
            }
            v.to_integer().try_into().map_err(|_| bad())
        };
        Ok(match tag {
            FamilyTag::SmallSphere => Family::SmallSphere {
                r2: rational("r2")?,
            },
            FamilyTag::CliffordTorus => Family::CliffordTorus {
                p: integer("p")?,
                q: integer("q")?,
                a2: rational("a2")?,
            },
            FamilyTag::EuclideanSphere => Family::EuclideanSphere { r: rational("r")? },
            FamilyTag::SphericalCylinder => Family::SphericalCylinder {
                p: integer("p")?,
                r: rational("r")?,
            },
            FamilyTag::GeodesicSphereH => Family::GeodesicSphereH {
                lambda: rational("lambda")?,
            },
            FamilyTag::HorosphereH => Family::HorosphereH,
            FamilyTag::EquidistantH => Family::EquidistantH {
                lambda: rational("lambda")?,
            },
            FamilyTag::HyperbolicCylinder => Family::HyperbolicCylinder {
                p: integer("p")?,
                lambda: rational("lambda")?,
            },
        })
    }
}

fn positive_root<T: Scalar>(square: T) -> Result<Curvature<T>> {
    Curvature::signed_sqrt(square, Ordering::Greater)
}

/// The principal-curvature spectrum of a family member.
pub fn build<T: Scalar>(sf: &SpaceForm<T>, fam: &Family<T>) -> Result<CurvatureSpectrum<T>> {
    let tag = fam.tag();
    let required = T::from_int(tag.curvature());
    if *sf.c() != required {
        return Err(Error::CurvatureMismatch {
            family: tag.to_string(),
            required: required.to_string(),
            got: sf.c().to_string(),
        });
    }
    let n = sf.n();
    fam.validate(n)?;
    let one = T::one();
    let entries = match fam {
        Family::SmallSphere { r2 } => {
            vec![(positive_root((one - r2.clone()) / r2.clone())?, n)]
        }
        Family::CliffordTorus { p, q, a2 } => {
            let b2 = one - a2.clone();
            vec![
                (positive_root(b2.clone() / a2.clone())?, *p),
                (positive_root(a2.clone() / b2)?.negated(), *q),
            ]
        }
        Family::EuclideanSphere { r } => vec![(Curvature::from_value(one / r.clone()), n)],
        Family::SphericalCylinder { p, r } => vec![
            (Curvature::from_value(one / r.clone()), *p),
            (Curvature::zero(), n - p),
        ],
        Family::GeodesicSphereH { lambda } | Family::EquidistantH { lambda } => {
            vec![(Curvature::from_value(lambda.clone()), n)]
        }
        Family::HorosphereH => vec![(Curvature::from_value(one), n)],
        Family::HyperbolicCylinder { p, lambda } => vec![
            (Curvature::from_value(lambda.clone()), *p),
            (Curvature::from_value(one / lambda.clone()), n - p),
        ],
    };
    CurvatureSpectrum::new(entries)
}

/// A representative admissible member of each family (used by sweeps and tests).
pub fn default_member(tag: FamilyTag, n: usize) -> Family<Rational> {
    use crate::scalar::{int, rat};
    let half = n / 2;
    match tag {
        FamilyTag::SmallSphere => Family::SmallSphere { r2: rat(1, 2) },
        FamilyTag::CliffordTorus => Family::CliffordTorus {
            p: n - half,
            q: half.max(1).min(n - 1),
            a2: rat(1, 2),
        },
        FamilyTag::EuclideanSphere => Family::EuclideanSphere { r: Rational::one() },
        FamilyTag::SphericalCylinder => Family::SphericalCylinder {
            p: half.max(1),
            r: Rational::one(),
        },
        FamilyTag::GeodesicSphereH => Family::GeodesicSphereH { lambda: int(2) },
        FamilyTag::HorosphereH => Family::HorosphereH,
        FamilyTag::EquidistantH => Family::EquidistantH { lambda: rat(1, 2) },
        FamilyTag::HyperbolicCylinder => Family::HyperbolicCylinder {
            p: half.max(1),
            lambda: int(2),
        },
    }
}
