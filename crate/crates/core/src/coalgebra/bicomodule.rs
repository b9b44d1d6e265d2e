//! Bicomodules over a coalgebra.

use super::Coalgebra;
use crate::algebra::Bimodule;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{kron_apply_left, kron_apply_right, vec_ops, Matrix};
use crate::report::AxiomReport;

/// A `C`-bicomodule with `ρ^l: M → C⊗M` and `ρ^r: M → M⊗C`.
///
/// `left` is `(n·m) x m` over the basis `c_s ⊗ m_b ↦ s·m + b`; `right` is `(m·n) x m`
/// over `m_b ⊗ c_t ↦ b·n + t`. Column `a` is the coaction of `m_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicomoduleData<F: Field> {
    pub coalgebra: Coalgebra<F>,
    pub dim: usize,
    pub left: Matrix<F>,
    pub right: Matrix<F>,
}

impl<F: Field> BicomoduleData<F> {
    pub fn new(coalgebra: Coalgebra<F>, dim: usize, left: Matrix<F>, right: Matrix<F>) -> Result<Self> {
        let n = coalgebra.dim();
        let shape = |x: &Matrix<F>| x.rows() == n * dim && x.cols() == dim;
        if !shape(&left) || !shape(&right) {
            return Err(Error::InvalidComodule(format!(
                "bicomodule coactions must be {}x{dim}",
                n * dim
            )));
        }
        Ok(BicomoduleData {
            coalgebra,
            dim,
            left,
            right,
        })
    }

    /// `C` over itself, with `ρ^l = ρ^r = Δ`.
    pub fn regular(c: &Coalgebra<F>) -> Self {
        BicomoduleData {
            coalgebra: c.clone(),
            dim: c.dim(),
            left: c.comult_matrix().clone(),
            right: c.comult_matrix().clone(),
        }
    }

    /// The dual `M*` of a `D`-bimodule as a `D*`-bicomodule, on the dual basis.
    ///
    /// The right coaction encodes `(d·φ)(x) = φ(x ◁ d)` and the left coaction
    /// `(φ·d)(x) = φ(d ▷ x)`.
    pub fn dual_of_bimodule(m: &Bimodule<F>) -> Self {
        let d = m.algebra();
        let c = d.dual_coalgebra();
        let (n, dim) = (d.dim(), m.dim());
        let f = d.field();
        let mut left = Matrix::zeros(f, n * dim, dim);
        let mut right = Matrix::zeros(f, dim * n, dim);
        for k in 0..n {
            let (lk, rk) = (&m.left_matrices()[k], &m.right_matrices()[k]);
            for a in 0..dim {
                for b in 0..dim {
                    right.set(b * n + k, a, rk.get(a, b).clone());
                    left.set(k * dim + b, a, lk.get(a, b).clone());
                }
            }
        }
        BicomoduleData {
            coalgebra: c,
            dim,
            left,
            right,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Coassociativity and counit law of both coactions plus their compatibility.
    pub fn verify(&self) -> AxiomReport {
        let c = &self.coalgebra;
        let (n, m) = (c.dim(), self.dim);
        let f = c.field();
        let eps = Matrix::from_rows(f, n, vec![c.counit().to_vec()]).unwrap();
        let delta = c.comult_matrix();
        let mut report = AxiomReport::default();
        for a in 0..m {
            let e = vec_ops::unit(f, m, a);
            let l = self.left.column(a);
            if kron_apply_left(delta, &l, m) != kron_apply_right(&self.left, &l, n) {
                report.push("left coassociativity", vec![a]);
            }
            if kron_apply_left(&eps, &l, m) != e {
                report.push("left counit", vec![a]);
            }
            let r = self.right.column(a);
            if kron_apply_left(&self.right, &r, n) != kron_apply_right(delta, &r, m) {
                report.push("right coassociativity", vec![a]);
            }
            if kron_apply_right(&eps, &r, m) != e {
                report.push("right counit", vec![a]);
            }
            // (id⊗ρ^r)ρ^l = (ρ^l⊗id)ρ^r inside C⊗M⊗C
            if kron_apply_right(&self.right, &l, n) != kron_apply_left(&self.left, &r, n) {
                report.push("compatibility", vec![a]);
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bimodule_from_automorphism, gaussian_conjugation, gaussian_rationals};
    use crate::constructors::divided_power;
    use crate::field::Rationals;

    #[test]
    fn regular_and_twisted_bicomodules_are_valid() {
        let q = Rationals;
        assert!(BicomoduleData::regular(&divided_power(&q, 2)).verify().is_valid());
        let d = gaussian_rationals(&q);
        let m = bimodule_from_automorphism(&d, &gaussian_conjugation(&q)).unwrap();
        let dual = BicomoduleData::dual_of_bimodule(&m);
        assert!(dual.verify().is_valid());
        let mut broken = dual.clone();
        broken.right = Matrix::zeros(&q, 4, 2);
        assert!(!broken.verify().is_valid());
    }
}
