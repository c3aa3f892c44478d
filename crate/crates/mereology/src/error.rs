//! Error type for the core mereology operations.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("behavior type `{id}` must have at least one behavior")]
    EmptyBehaviorType { id: String },

    #[error("duplicate behavior label `{label}` in behavior type `{id}`")]
    DuplicateLabel { id: String, label: String },

    #[error("behavior index {index} out of range for `{id}` (size {size})")]
    IndexOutOfRange { id: String, index: usize, size: usize },

    #[error("restriction map has length {got} but the system `{id}` has {expected} behaviors")]
    MapLengthMismatch { id: String, expected: usize, got: usize },

    #[error("restriction map onto `{id}` is not surjective: behavior {index} has no preimage")]
    NotSurjective { id: String, index: usize },

    #[error("parts live over different systems: `{left}` vs `{right}`")]
    SystemMismatch { left: String, right: String },

    #[error("constraint carrier mismatch: expected `{expected}`, found `{found}`")]
    CarrierMismatch { expected: String, found: String },

    #[error("constraint has {got} bits but its carrier `{id}` has {expected} behaviors")]
    BitLengthMismatch { id: String, expected: usize, got: usize },

    #[error("variable `{var}` is not bound by the behaviors of `{id}`")]
    UnknownVariable { var: String, id: String },

    #[error("accessibility relation is not an equivalence: {reason}")]
    NotAnEquivalence { reason: String },
}
