//! Gröbner-Shirshov bases for associative dialgebras.
//!
//! Polynomials live in the free dialgebra over the rationals, with basis the
//! normal diwords `[u]_m`. On top of exact arithmetic the crate provides
//! reduction modulo a monic rule set, detection of every composition kind,
//! a basis checker, Shirshov completion, reduced-basis construction,
//! disemigroup normal forms and a brute-force ideal-membership oracle.

pub mod alphabet;
pub mod completion;
pub mod compositions;
pub mod disemigroup;
pub mod diword;
pub mod error;
pub mod format;
pub mod oracle;
pub mod order;
pub mod par;
pub mod poly;
pub mod rewrite;
pub mod rules;

pub use alphabet::{Alphabet, Letter, Word};
pub use disemigroup::{closed_form_nf, family_reduced, family_rules, tau, Family, Presentation};
pub use diword::NormalDiword;
pub use error::{Error, Result};
pub use format::{format_poly, parse_diword, parse_poly, ProblemFile};
pub use oracle::{span_membership, Membership};
pub use order::{compare, validate_order, DegLex, SharedOrder, WordOrder};
pub use par::Execution;
pub use poly::{rational, Coefficient, DiPolynomial, LeadingData};
pub use rewrite::{
    enumerate_irr, find_occurrence, instantiate, normal_form, p_set, reduce, NormalForm,
    Occurrence, SDiword,
};
pub use rules::{RewriteRule, RuleSet};
