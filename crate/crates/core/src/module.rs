//! Finite-dimensional modules given by the action matrices of algebra generators.

use crate::coalgebra::Comodule;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// A module over some algebra, recorded only through the matrices of a spanning set.
///
/// Submodules are the subspaces stable under every matrix in `actions`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionModule<F: Field> {
    field: F,
    dim: usize,
    actions: Vec<Matrix<F>>,
}

impl<F: Field> ActionModule<F> {
    pub fn new(field: &F, dim: usize, actions: Vec<Matrix<F>>) -> Result<Self> {
        if actions.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("action matrices must be {dim}x{dim}")));
        }
        Ok(ActionModule {
            field: field.clone(),
            dim,
            actions,
        })
    }

    /// A right comodule as a left module over the dual algebra.
    pub fn from_comodule(m: &Comodule<F>) -> Self {
        ActionModule {
            field: m.field().clone(),
            dim: m.dim(),
            actions: m.basis_actions(),
        }
    }

    /// `A` acting on itself by left multiplication; submodules are left ideals.
    pub fn left_regular(a: &Algebra<F>) -> Self {
        ActionModule {
            field: a.field().clone(),
            dim: a.dim(),
            actions: (0..a.dim()).map(|i| a.left_mult(&a.basis_vector(i))).collect(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn actions(&self) -> &[Matrix<F>] {
        &self.actions
    }

    /// The submodule generated by `v`.
    pub fn cyclic(&self, v: &[F::Elem]) -> Subspace<F> {
        self.generated(vec![v.to_vec()])
    }

    /// The submodule generated by a family of vectors.
    pub fn generated(&self, vectors: Vec<Vec<F::Elem>>) -> Subspace<F> {
        let mut cur = Subspace::span(&self.field, self.dim, vectors).expect("generators fit the module");
        loop {
            let mut vecs = cur.basis_vecs();
            for b in cur.basis_vecs() {
                vecs.extend(self.actions.iter().map(|m| m.apply(&b)));
            }
            let next = Subspace::span(&self.field, self.dim, vecs).expect("images fit the module");
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_submodule(&self, s: &Subspace<F>) -> bool {
        s.basis_vecs()
            .iter()
            .all(|v| self.actions.iter().all(|m| s.contains(&m.apply(v))))
    }

    /// `upper / lower` for submodules `lower ⊆ upper`, on the complement basis inside `upper`.
    pub fn subquotient(&self, upper: &Subspace<F>, lower: &Subspace<F>) -> Result<ActionModule<F>> {
        if !lower.is_subspace_of(upper) {
            return Err(Error::InvalidComodule("subquotient with lower term not contained in upper".into()));
        }
        let f = &self.field;
        let coords = |v: &[F::Elem]| {
            upper
                .coordinates(v)
                .ok_or_else(|| Error::InvalidComodule("upper term is not a submodule".into()))
        };
        let lower_in = Subspace::span(f, upper.dim(), lower.basis_vecs().iter().map(|v| coords(v)).collect::<Result<_>>()?)?;
        let uvecs = upper.basis_vecs();
        let reps: Vec<usize> = lower_in.complement_indices();
        let mut actions = Vec::with_capacity(self.actions.len());
        for m in &self.actions {
            let mut cols = Vec::with_capacity(reps.len());
            for &r in &reps {
                let image = coords(&m.apply(&uvecs[r]))?;
                cols.push(lower_in.quotient_coordinates(&image));
            }
            actions.push(Matrix::from_columns(f, reps.len(), cols)?);
        }
        ActionModule::new(f, reps.len(), actions)
    }

    /// Module maps `T: self → other` as row-major `other.dim x self.dim` matrices.
    pub fn hom_space(&self, other: &ActionModule<F>) -> Result<Subspace<F>> {
        if self.actions.len() != other.actions.len() {
            return Err(Error::DimensionMismatch("modules over different generating sets".into()));
        }
        let f = &self.field;
        let (m, p) = (self.dim, other.dim);
        let im = Matrix::identity(f, m);
        let ip = Matrix::identity(f, p);
        let mut stacked = Matrix::zeros(f, 0, p * m);
        for (a, b) in self.actions.iter().zip(&other.actions) {
            // vec(B T − T A) = (B ⊗ I − I ⊗ Aᵀ) vec(T)
            stacked = stacked.vstack(&b.kronecker(&im).sub(&ip.kronecker(&a.transpose())));
        }
        Ok(stacked.kernel())
    }

    pub fn hom_basis(&self, other: &ActionModule<F>) -> Result<Vec<Matrix<F>>> {
        let (m, p) = (self.dim, other.dim);
        Ok(self
            .hom_space(other)?
            .basis_vecs()
            .into_iter()
            .map(|v| Matrix::from_flat(&self.field, p, m, v).unwrap())
            .collect())
    }

    /// Whether `t` intertwines the actions.
    pub fn is_hom(&self, other: &ActionModule<F>, t: &Matrix<F>) -> bool {
        t.rows() == other.dim
            && t.cols() == self.dim
            && self.actions.iter().zip(&other.actions).all(|(a, b)| b.mul(t) == t.mul(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::polynomial_quotient;
    use crate::field::Rationals;
    use crate::poly::Poly;

    #[test]
    fn cyclic_ideals_of_truncated_polynomials() {
        let q = Rationals;
        let a = polynomial_quotient(&q, &Poly::monomial(&q, q.one(), 3)).unwrap();
        let m = ActionModule::left_regular(&a);
        assert_eq!(m.cyclic(&a.basis_vector(1)), Subspace::coordinate(&q, 3, &[1, 2]));
        let top = Subspace::full(&q, 3);
        let mid = Subspace::coordinate(&q, 3, &[1, 2]);
        let quot = m.subquotient(&top, &mid).unwrap();
        assert_eq!(quot.dim(), 1);
        assert_eq!(m.hom_space(&m).unwrap().dim(), 3);
    }
}
