//! Bimodules over an algebra, given by the action matrices of basis elements.

use super::{require_automorphism, Algebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::report::AxiomReport;

/// A `D`-bimodule: `left[a]` is `x ↦ e_a ▷ x` and `right[b]` is `x ↦ x ◁ e_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<F: Field> {
    algebra: Algebra<F>,
    dim: usize,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
}

impl<F: Field> Bimodule<F> {
    pub fn new(algebra: Algebra<F>, dim: usize, left: Vec<Matrix<F>>, right: Vec<Matrix<F>>) -> Result<Self> {
        let n = algebra.dim();
        let shaped = |ms: &[Matrix<F>]| ms.len() == n && ms.iter().all(|m| m.rows() == dim && m.cols() == dim);
        if !shaped(&left) || !shaped(&right) {
            return Err(Error::InvalidBimodule(format!(
                "expected {n} action matrices of size {dim}x{dim} on each side"
            )));
        }
        Ok(Bimodule {
            algebra,
            dim,
            left,
            right,
        })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn left_matrices(&self) -> &[Matrix<F>] {
        &self.left
    }
    pub fn right_matrices(&self) -> &[Matrix<F>] {
        &self.right
    }

    fn combine(&self, ms: &[Matrix<F>], a: &[F::Elem]) -> Matrix<F> {
        let f = self.algebra.field();
        let mut out = Matrix::zeros(f, self.dim, self.dim);
        for (c, m) in a.iter().zip(ms) {
            if !f.is_zero(c) {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Matrix of `x ↦ a ▷ x`.
    pub fn left_action(&self, a: &[F::Elem]) -> Matrix<F> {
        self.combine(&self.left, a)
    }

    /// Matrix of `x ↦ x ◁ b`.
    pub fn right_action(&self, b: &[F::Elem]) -> Matrix<F> {
        self.combine(&self.right, b)
    }

    /// Unit, associativity and commuting-actions laws on basis elements.
    pub fn verify(&self) -> AxiomReport {
        let d = &self.algebra;
        let n = d.dim();
        let id = Matrix::identity(d.field(), self.dim);
        let mut report = AxiomReport::default();
        if self.left_action(d.unit()) != id {
            report.push("left unit", vec![]);
        }
        if self.right_action(d.unit()) != id {
            report.push("right unit", vec![]);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = d.basis_product(a, b);
                if self.left_action(&ab) != self.left[a].mul(&self.left[b]) {
                    report.push("left associativity", vec![a, b]);
                }
                // x ◁ (ab) = (x ◁ a) ◁ b
                if self.right_action(&ab) != self.right[b].mul(&self.right[a]) {
                    report.push("right associativity", vec![a, b]);
                }
                if self.left[a].mul(&self.right[b]) != self.right[b].mul(&self.left[a]) {
                    report.push("actions commute", vec![a, b]);
                }
            }
        }
        report
    }
}

/// `D_α`: the space `D` with `a ▷ x = ax` and `x ◁ b = x·α(b)`.
pub fn bimodule_from_automorphism<F: Field>(d: &Algebra<F>, alpha: &Matrix<F>) -> Result<Bimodule<F>> {
    require_automorphism(d, alpha, "alpha")?;
    let n = d.dim();
    let left = (0..n).map(|a| d.left_mult(&d.basis_vector(a))).collect();
    let right = (0..n).map(|b| d.right_mult(&alpha.column(b))).collect();
    Bimodule::new(d.clone(), n, left, right)
}

/// Whether `f: M → N` is an invertible map commuting with both actions.
pub fn verify_bimodule_isomorphism<F: Field>(m: &Bimodule<F>, n: &Bimodule<F>, f: &Matrix<F>) -> AxiomReport {
    let mut report = AxiomReport::default();
    if f.rows() != n.dim() || f.cols() != m.dim() {
        report.push("shape", vec![f.rows(), f.cols()]);
        return report;
    }
    if !f.is_invertible() {
        report.push("invertible", vec![]);
    }
    for a in 0..m.algebra().dim() {
        if f.mul(&m.left[a]) != n.left[a].mul(f) {
            report.push("left linear", vec![a]);
        }
        if f.mul(&m.right[a]) != n.right[a].mul(f) {
            report.push("right linear", vec![a]);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gaussian_conjugation, gaussian_rationals};
    use crate::field::Rationals;

    #[test]
    fn twisted_gaussian_bimodule() {
        let q = Rationals;
        let c = gaussian_rationals(&q);
        let conj = gaussian_conjugation(&q);
        let m = bimodule_from_automorphism(&c, &conj).unwrap();
        assert!(m.verify().is_valid());
        // i ◁ i = i·conj(i) = 1
        let i = c.basis_vector(1);
        assert_eq!(m.right_action(&i).apply(&i), c.unit().to_vec());
        let regular = bimodule_from_automorphism(&c, &Matrix::identity(&q, 2)).unwrap();
        assert!(regular.verify().is_valid());
        assert_eq!(regular.right_action(&i).apply(&i), vec![q.from_i64(-1), q.zero()]);
    }
}
