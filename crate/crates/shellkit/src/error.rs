use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("variable index {var} out of range for {n} variables")]
    VariableOutOfRange { var: usize, n: usize },

    #[error("operation is not defined for the unit ideal")]
    UnitIdeal,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("empty variable set")]
    EmptyVarSet,

    #[error("empty multicomplex")]
    EmptyMulticomplex,

    #[error("void complex")]
    VoidComplex,

    #[error("the given order is not a permutation of the facets")]
    NotAFacetPermutation,

    #[error("the given facet order is not a shelling: step {step}: {reason}")]
    NotAShelling { step: usize, reason: String },

    #[error("filtration verification failed at step {step}: {reason}")]
    InvalidFiltration { step: usize, reason: String },

    #[error("shelling does not match the multicomplex it is verified against")]
    ShellingMismatch,

    #[error("cohomological index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("quotient ring is not pretty clean; the requested invariant is only computed under that hypothesis")]
    NotPrettyClean,

    #[error("Hilbert table was not built from a verified pretty clean filtration")]
    UnverifiedTable,
}

pub type Result<T> = std::result::Result<T, Error>;
