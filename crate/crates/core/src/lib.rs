//! Exact linear algebra for finite-dimensional algebras, coalgebras and their
//! comodule lattices over the rationals and prime fields.

pub mod algebra;
pub mod coalgebra;
pub mod constructors;
pub mod error;
pub mod factor;
pub mod field;
pub mod lattice;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod report;
pub mod serial;
pub mod subspace;

pub use error::{Error, Result};
pub use factor::{Factorable, Factorization};
pub use field::{Field, FieldDescriptor, PrimeField, Rationals};
pub use matrix::{kronecker, solve_linear, Matrix};
pub use poly::{minimal_polynomial, Poly};
pub use subspace::Subspace;

pub use algebra::Algebra;
pub use coalgebra::{Coalgebra, Comodule};
pub use report::{AxiomReport, Certainty, Verdict};

/// Limits shared by the searching and factoring routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Maximum number of vectors an exhaustive enumeration may visit.
    pub budget: u64,
    /// Largest square-free degree factored over Q.
    pub degree_cap: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            budget: 1 << 20,
            degree_cap: 12,
        }
    }
}

pub type QMatrix = Matrix<Rationals>;
pub type FpMatrix = Matrix<PrimeField>;
pub type QSubspace = Subspace<Rationals>;
pub type FpSubspace = Subspace<PrimeField>;
pub type QAlgebra = Algebra<Rationals>;
pub type FpAlgebra = Algebra<PrimeField>;
pub type QCoalgebra = Coalgebra<Rationals>;
pub type FpCoalgebra = Coalgebra<PrimeField>;
