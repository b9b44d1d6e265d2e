//! Linear maps between coalgebras and their verification.

use super::Coalgebra;
use crate::field::Field;
use crate::matrix::{kron_apply_left, kron_apply_right, Matrix};
use crate::report::AxiomReport;

/// `θ: source → target`, with column `k` the image of the source basis vector `e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraMap<F: Field> {
    pub source: Coalgebra<F>,
    pub target: Coalgebra<F>,
    pub matrix: Matrix<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub report: AxiomReport,
    pub is_iso: bool,
}

impl MorphismReport {
    pub fn is_morphism(&self) -> bool {
        self.report.is_valid()
    }
}

impl<F: Field> CoalgebraMap<F> {
    pub fn new(source: Coalgebra<F>, target: Coalgebra<F>, matrix: Matrix<F>) -> Self {
        CoalgebraMap { source, target, matrix }
    }

    pub fn identity(c: &Coalgebra<F>) -> Self {
        CoalgebraMap::new(c.clone(), c.clone(), Matrix::identity(c.field(), c.dim()))
    }

    pub fn verify(&self) -> MorphismReport {
        verify_morphism(self)
    }
}

/// Checks `Δ_t ∘ θ = (θ⊗θ) ∘ Δ_s` and `ε_t ∘ θ = ε_s` on basis vectors.
pub fn verify_morphism<F: Field>(map: &CoalgebraMap<F>) -> MorphismReport {
    let (s, t, theta) = (&map.source, &map.target, &map.matrix);
    let mut report = AxiomReport::default();
    if theta.rows() != t.dim() || theta.cols() != s.dim() {
        report.push("shape", vec![theta.rows(), theta.cols()]);
        return MorphismReport { report, is_iso: false };
    }
    for k in 0..s.dim() {
        let image = theta.column(k);
        let lhs = t.delta(&image);
        let ds = s.delta(&s.basis_vector(k));
        let rhs = kron_apply_left(theta, &kron_apply_right(theta, &ds, s.dim()), t.dim());
        if lhs != rhs {
            report.push("comultiplication", vec![k]);
        }
        if t.counit_of(&image) != s.counit()[k] {
            report.push("counit", vec![k]);
        }
    }
    let is_iso = report.is_valid() && s.dim() == t.dim() && theta.is_invertible();
    MorphismReport { report, is_iso }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::polynomial_quotient;
    use crate::constructors::divided_power;
    use crate::field::Rationals;
    use crate::poly::Poly;

    #[test]
    fn divided_power_is_dual_of_truncated_polynomials() {
        let q = Rationals;
        let dc = divided_power(&q, 3);
        assert!(CoalgebraMap::identity(&dc).verify().is_iso);
        let a = polynomial_quotient(&q, &Poly::monomial(&q, q.one(), 4)).unwrap();
        let map = CoalgebraMap::new(dc.clone(), a.dual_coalgebra(), Matrix::identity(&q, 4));
        assert!(map.verify().is_iso);
        let scaled = CoalgebraMap::new(dc.clone(), dc, Matrix::diagonal(&q, &[q.one(), q.from_i64(2), q.one(), q.one()]));
        assert!(!scaled.verify().is_morphism());
    }
}
