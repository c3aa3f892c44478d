//! A finite-model engine for behavioral mereology.
//!
//! Systems are finite behavior types; parts are surjections out of them
//! (equivalently, partitions); constraints are predicates on a part's
//! behaviors. The library evaluates compatibility and determination,
//! the lattice of parts, the quantifier adjoints along the part order,
//! and the "allows"/"ensures" inter-modalities, together with the
//! classical possibility/necessity and equivalence-frame Kripke
//! modalities they recover.
//!
//! The [`dsl`] module provides a textual front end (`.msys` files) and
//! [`laws`] a machine-checked law suite over any model. The [`oracle`]
//! module holds deliberately naive evaluators used as differential-test
//! ground truth; nothing outside tests should need it.

pub mod behavior;
pub mod builders;
pub mod constraint;
pub mod dsl;
pub mod error;
pub mod expr;
pub mod laws;
pub mod modal;
pub mod model;
pub mod oracle;
pub mod part;
pub mod span;

pub use behavior::{Behavior, BehaviorType, Rational};
pub use constraint::{entails, Constraint};
pub use error::Error;
pub use laws::{law_suite, LawReport};
pub use model::SystemModel;
pub use part::{
    compatible, compatible_family, determines, disjoint, join, meet, order_equivalents,
    part_determines, part_leq, strongly_disjoint, Part, PartOrderWitness,
};
