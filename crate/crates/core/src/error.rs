use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("polynomial of degree {degree} exceeds the factorization cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("characteristic {p} is too small for the trace-form radical of a {dim}-dimensional algebra")]
    SmallCharacteristic { p: u64, dim: usize },

    #[error("enumeration needs {needed} vectors but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid coalgebra: {0}")]
    InvalidCoalgebra(String),

    #[error("invalid comodule: {0}")]
    InvalidComodule(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),

    #[error("input is not graded: {0}")]
    NotGraded(String),

    #[error("not a chain coalgebra: {0}")]
    NotChain(String),

    #[error("methods disagree: {0}")]
    MethodDisagreement(String),

    #[error("undecided: {0}")]
    Unknown(String),

    #[error("unknown construction: {0}")]
    UnknownConstruction(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Budget and cap failures degrade a verdict instead of refuting it.
    pub fn is_degradation(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. }
                | Error::DegreeCapExceeded { .. }
                | Error::Unknown(_)
                | Error::SmallCharacteristic { .. }
        )
    }
}
