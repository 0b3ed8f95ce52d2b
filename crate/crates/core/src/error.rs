use thiserror::Error;

use crate::group::ValidationReport;
use crate::weight::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("root must be nonzero")]
    ZeroRoot,

    #[error("weight {0} is not strictly dominant for the compact positive roots")]
    NotStrictlyDominant(Weight),

    #[error("weight {0} is not dominant for the compact positive roots")]
    NotDominant(Weight),

    #[error("compact root {root} pairs to zero with the defining weight")]
    NondegeneracyViolation { root: Weight },

    #[error("Levi pairs {first} and {second} are not orthogonal")]
    NonOrthogonalLevi { first: Weight, second: Weight },

    #[error("sign vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("coroot pairing {0} is not an integer")]
    NonIntegralPairing(String),

    #[error("{weight} is not genuine: shifting by the spin highest weight leaves the integral lattice")]
    NotGenuine { weight: Weight },

    #[error("{0} is not analytically integral")]
    NotIntegral(Weight),

    #[error("ambiguous positive system: {weight} pairs to zero with noncompact weight {root}")]
    AmbiguousPositiveSystem { weight: Weight, root: Weight },

    #[error("minimal K-type {0} is not dominant")]
    DominanceFailure(Weight),

    #[error("genuine dominant weight {0} produced no essential datum")]
    InternalBijectionFailure(Weight),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("radius must be positive, got {0}")]
    InvalidRadius(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("descriptor failed validation:\n{0}")]
    Validation(ValidationReport),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InternalBijectionFailure(_)
                | Error::InvariantViolation(_)
                | Error::DominanceFailure(_)
                | Error::NondegeneracyViolation { .. }
                | Error::NonOrthogonalLevi { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
