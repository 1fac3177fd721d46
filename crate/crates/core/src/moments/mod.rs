//! Moment identities, Vandermonde systems and formal derivation checks.

pub mod certificate;
pub mod chains;
pub mod closed_form;
pub mod multipoly;
pub mod vandermonde;

pub use certificate::{
    collapse, solve_masses, uniform_rate_certificate, Certificate, MomentSystem, Status,
    UniformCase, Witness,
};
pub use chains::{
    lemma4_formal_check, lemma4_steps, r6_elimination, r6_elimination_check, theorem3_chain,
    theorem3_chain_check, Lemma4Variant, Step,
};
pub use closed_form::{
    closed_form_f, lemma3_formal_check, lemma3_formal_check_with, recurrence_check,
    recurrence_check_symbolic, recurrence_check_with,
};
pub use multipoly::{formal_derive, Derivation, Monomial, MultiPoly, Ring};
pub use vandermonde::{
    vandermonde_det, vandermonde_identity_check, vandermonde_random_suite, SuiteOutcome,
    VandermondeMode,
};
