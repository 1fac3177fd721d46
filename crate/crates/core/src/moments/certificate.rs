//! Moment systems `sum_a m_a P_a^q = f(q)` and exact (in)feasibility certificates.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::closed_form::closed_form_f;
use super::vandermonde::solve_linear;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Status {
    Feasible,
    Infeasible,
}

/// How the two constraints of a contradiction must relate if consistent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Relation {
    /// `first = second`; defect `first - second`.
    Equal,
    /// `first^2 = second`; defect `first^2 - second`.
    SquareEquals,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint<T> {
    pub label: String,
    pub value: T,
}

impl<T: Scalar> Constraint<T> {
    fn new(label: impl Into<String>, value: T) -> Self {
        Constraint {
            label: label.into(),
            value,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness<T> {
    Masses(Vec<T>),
    Contradiction {
        first: Constraint<T>,
        second: Constraint<T>,
        relation: Relation,
        defect: T,
        /// Moment index of the violated equation, when there is one.
        moment: Option<u32>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate<T> {
    pub status: Status,
    pub witness: Witness<T>,
}

impl<T: Scalar> Certificate<T> {
    fn feasible(masses: Vec<T>) -> Self {
        Certificate {
            status: Status::Feasible,
            witness: Witness::Masses(masses),
        }
    }

    fn contradiction(
        first: Constraint<T>,
        second: Constraint<T>,
        relation: Relation,
        moment: Option<u32>,
    ) -> Self {
        let lhs = match relation {
            Relation::Equal => first.value.clone(),
            Relation::SquareEquals => first.value.clone() * first.value.clone(),
        };
        let defect = lhs - second.value.clone();
        Certificate {
            status: Status::Infeasible,
            witness: Witness::Contradiction {
                first,
                second,
                relation,
                defect,
                moment,
            },
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.status == Status::Feasible
    }

    pub fn defect(&self) -> Option<&T> {
        match &self.witness {
            Witness::Contradiction { defect, .. } => Some(defect),
            Witness::Masses(_) => None,
        }
    }

    pub fn masses(&self) -> Option<&[T]> {
        match &self.witness {
            Witness::Masses(m) => Some(m),
            Witness::Contradiction { .. } => None,
        }
    }

    /// Internal consistency: an infeasible witness really is contradictory,
    /// i.e. its recomputed defect matches and is nonzero.
    pub fn verify(&self) -> bool {
        match (&self.status, &self.witness) {
            (Status::Feasible, Witness::Masses(_)) => true,
            (
                Status::Infeasible,
                Witness::Contradiction {
                    first,
                    second,
                    relation,
                    defect,
                    ..
                },
            ) => {
                let redo =
                    Certificate::contradiction(first.clone(), second.clone(), *relation, None);
                redo.defect() == Some(defect) && !defect.is_zero()
            }
            _ => false,
        }
    }
}

impl<T: Scalar> Serialize for Certificate<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Certificate", 6)?;
        st.serialize_field("status", &self.status)?;
        match &self.witness {
            Witness::Masses(m) => {
                let m: Vec<String> = m.iter().map(|x| x.to_string()).collect();
                st.serialize_field("masses", &m)?;
            }
            Witness::Contradiction {
                first,
                second,
                relation,
                defect,
                moment,
            } => {
                let pair = [
                    (first.label.as_str(), first.value.to_string()),
                    (second.label.as_str(), second.value.to_string()),
                ];
                st.serialize_field("constraints", &pair)?;
                st.serialize_field("relation", relation)?;
                st.serialize_field("defect", &defect.to_string())?;
                st.serialize_field("moment", moment)?;
            }
        }
        st.end()
    }
}

/// Solves the first `|rates|` equations `sum_j m_j r_j^q = targets[q-1]`
/// (`q = 1, 2, ...`) for the masses, then checks the remaining ones.
pub fn solve_masses<T: Scalar>(rates: &[T], targets: &[T]) -> Result<Certificate<T>> {
    let k = rates.len();
    if targets.len() < k {
        return Err(Error::TooFewTargets {
            needed: k,
            got: targets.len(),
        });
    }
    for (j, r) in rates.iter().enumerate() {
        if r.is_zero() {
            return Err(Error::ZeroRate);
        }
        if rates[..j].contains(r) {
            return Err(Error::RepeatedRate(r.to_string()));
        }
    }
    let matrix: Vec<Vec<T>> = (1..=k as u32)
        .map(|q| rates.iter().map(|r| r.powu(q)).collect())
        .collect();
    let masses = solve_linear(matrix, targets[..k].to_vec())
        .expect("distinct nonzero rates give a nonsingular system");
    for (i, target) in targets.iter().enumerate().skip(k) {
        let q = i as u32 + 1;
        let predicted = moment(&masses, rates, q);
        if predicted != *target {
            return Ok(Certificate::contradiction(
                Constraint::new(format!("sum m P^{q} from solved masses"), predicted),
                Constraint::new(format!("target f({q})"), target.clone()),
                Relation::Equal,
                Some(q),
            ));
        }
    }
    Ok(Certificate::feasible(masses))
}

/// `sum_j m_j r_j^q`.
pub fn moment<T: Scalar>(masses: &[T], rates: &[T], q: u32) -> T {
    masses
        .iter()
        .zip(rates)
        .fold(T::zero(), |acc, (m, r)| acc + m.clone() * r.powu(q))
}

/// Merges equal rates by adding their masses; order of first occurrence kept.
pub fn collapse<T: Scalar>(masses: &[T], rates: &[T]) -> Result<(Vec<T>, Vec<T>)> {
    if masses.len() != rates.len() {
        return Err(Error::LengthMismatch(masses.len(), rates.len()));
    }
    let mut out_m: Vec<T> = Vec::new();
    let mut out_r: Vec<T> = Vec::new();
    for (m, r) in masses.iter().zip(rates) {
        match out_r.iter().position(|x| x == r) {
            Some(i) => out_m[i] = out_m[i].clone() + m.clone(),
            None => {
                out_m.push(m.clone());
                out_r.push(r.clone());
            }
        }
    }
    Ok((out_m, out_r))
}

/// Rates `P_a` with targets `f(1), ..., f(q_max)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSystem<T> {
    pub rates: Vec<T>,
    pub targets: Vec<T>,
}

impl<T: Scalar> MomentSystem<T> {
    /// Targets from the closed form with curvature `c` and trace `nH`.
    pub fn from_closed_form(c: &T, n_h: &T, rates: Vec<T>, q_max: u32) -> Self {
        let targets = (1..=q_max).map(|q| closed_form_f(q, c, n_h)).collect();
        MomentSystem { rates, targets }
    }

    /// Targets generated from a known assignment; equal rates are collapsed.
    pub fn from_assignment(masses: &[T], rates: &[T], q_max: u32) -> Result<(Self, Vec<T>)> {
        let (m, r) = collapse(masses, rates)?;
        let targets = (1..=q_max).map(|q| moment(&m, &r, q)).collect();
        Ok((MomentSystem { rates: r, targets }, m))
    }

    pub fn solve(&self) -> Result<Certificate<T>> {
        solve_masses(&self.rates, &self.targets)
    }

    /// Re-checks a certificate against this system.
    pub fn verify(&self, cert: &Certificate<T>) -> bool {
        if !cert.verify() {
            return false;
        }
        match &cert.witness {
            Witness::Masses(m) => {
                m.len() == self.rates.len()
                    && self
                        .targets
                        .iter()
                        .enumerate()
                        .all(|(i, t)| moment(m, &self.rates, i as u32 + 1) == *t)
            }
            Witness::Contradiction { moment: q, .. } => {
                let Some(q) = *q else { return false };
                let k = self.rates.len();
                let matrix: Vec<Vec<T>> = (1..=k as u32)
                    .map(|e| self.rates.iter().map(|r| r.powu(e)).collect())
                    .collect();
                let Some(m) = solve_linear(matrix, self.targets[..k].to_vec()) else {
                    return false;
                };
                let idx = q as usize - 1;
                idx < self.targets.len() && moment(&m, &self.rates, q) != self.targets[idx]
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum UniformCase {
    /// All rates equal: `P^2 = f(2)/f(0)` against `P^4 = f(4)/f(0)`.
    Case1,
    /// `P^2` forced twice: `f(4)/f(2)` against `f(6)/f(4)`.
    Case3,
}

/// The contradiction forced when every nonzero rate shares one value `P`.
/// Ratios of the closed form do not depend on `nH`, so `nH = 1` is used.
pub fn uniform_rate_certificate<T: Scalar>(c: &T, case: UniformCase) -> Result<Certificate<T>> {
    if c.is_zero() {
        return Err(Error::ZeroCurvature);
    }
    let one = T::one();
    let f = |q| closed_form_f(q, c, &one);
    Ok(match case {
        UniformCase::Case1 => Certificate::contradiction(
            Constraint::new("P^2 = f(2)/f(0)", f(2) / f(0)),
            Constraint::new("P^4 = f(4)/f(0)", f(4) / f(0)),
            Relation::SquareEquals,
            Some(4),
        ),
        UniformCase::Case3 => Certificate::contradiction(
            Constraint::new("P^2 = f(4)/f(2)", f(4) / f(2)),
            Constraint::new("P^2 = f(6)/f(4)", f(6) / f(4)),
            Relation::Equal,
            Some(6),
        ),
    })
}
