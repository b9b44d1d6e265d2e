//! Finite-dimensional coalgebras given by structure constants.

mod bicomodule;
mod comodule;
mod filtration;
mod lift;
mod morphism;

pub use bicomodule::BicomoduleData;
pub use comodule::{Comodule, SimplicityCheck};
pub use filtration::{coradical_filtration, filtration_by_annihilators, filtration_by_wedges, Filtration};
pub use lift::graded_iso_lift;
pub use morphism::{verify_morphism, CoalgebraMap, MorphismReport};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{kron_apply_left, kron_apply_right, vec_ops, Matrix};
use crate::report::AxiomReport;
use crate::subspace::Subspace;

/// Hit action side: `Left` is `f ⇀ c = (id⊗f)Δ(c)`, `Right` is `c ↼ f = (f⊗id)Δ(c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A coalgebra on basis `e_0 … e_{n-1}` with `Δ(e_k) = Σ d[k][i][j] e_i⊗e_j`.
///
/// The comultiplication is stored as an `n² x n` matrix whose column `k` is `Δ(e_k)`
/// in the tensor basis `e_i⊗e_j ↦ i·n + j`. An optional grading lists the basis
/// indices of each homogeneous component, degree 0 first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra<F: Field> {
    field: F,
    dim: usize,
    comult: Matrix<F>,
    counit: Vec<F::Elem>,
    grading: Option<Vec<Vec<usize>>>,
}

impl<F: Field> Coalgebra<F> {
    /// Builds a coalgebra from `d[k][i][j]` and the counit; axioms are not checked.
    pub fn new(field: &F, comult: Vec<Vec<Vec<F::Elem>>>, counit: Vec<F::Elem>) -> Result<Self> {
        let n = counit.len();
        if comult.len() != n || comult.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication table is not {n}x{n}x{n}"
            )));
        }
        let mut m = Matrix::zeros(field, n * n, n);
        for (k, rows) in comult.into_iter().enumerate() {
            for (i, row) in rows.into_iter().enumerate() {
                for (j, x) in row.into_iter().enumerate() {
                    m.set(i * n + j, k, x);
                }
            }
        }
        Ok(Coalgebra {
            field: field.clone(),
            dim: n,
            comult: m,
            counit,
            grading: None,
        })
    }

    pub fn from_comult_matrix(comult: Matrix<F>, counit: Vec<F::Elem>) -> Result<Self> {
        let n = counit.len();
        if comult.rows() != n * n || comult.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication matrix is {}x{}, expected {}x{n}",
                comult.rows(),
                comult.cols(),
                n * n
            )));
        }
        Ok(Coalgebra {
            field: comult.field().clone(),
            dim: n,
            comult,
            counit,
            grading: None,
        })
    }

    /// Builds a coalgebra from `Δ(e_k)` given as a list of `(i, j, coefficient)` terms.
    pub fn from_terms(
        field: &F,
        n: usize,
        counit: Vec<F::Elem>,
        mut delta: impl FnMut(usize) -> Vec<(usize, usize, F::Elem)>,
    ) -> Self {
        let mut m = Matrix::zeros(field, n * n, n);
        for k in 0..n {
            for (i, j, c) in delta(k) {
                let cur = field.add(m.get(i * n + j, k), &c);
                m.set(i * n + j, k, cur);
            }
        }
        Coalgebra {
            field: field.clone(),
            dim: n,
            comult: m,
            counit,
            grading: None,
        }
    }

    /// Attaches a grading after checking that it is a partition compatible with `Δ` and `ε`.
    pub fn with_grading(mut self, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = self.dim;
        let mut degree = vec![usize::MAX; n];
        for (d, block) in blocks.iter().enumerate() {
            for &i in block {
                if i >= n || degree[i] != usize::MAX {
                    return Err(Error::NotGraded(format!("index {i} is out of range or repeated")));
                }
                degree[i] = d;
            }
        }
        if degree.contains(&usize::MAX) {
            return Err(Error::NotGraded("grading blocks do not cover the basis".into()));
        }
        let f = &self.field;
        for k in 0..n {
            if degree[k] > 0 && !f.is_zero(&self.counit[k]) {
                return Err(Error::NotGraded(format!("counit is nonzero on e_{k} of positive degree")));
            }
            for i in 0..n {
                for j in 0..n {
                    if !f.is_zero(self.d(k, i, j)) && degree[i] + degree[j] != degree[k] {
                        return Err(Error::NotGraded(format!(
                            "Δ(e_{k}) has a term e_{i}⊗e_{j} of the wrong degree"
                        )));
                    }
                }
            }
        }
        self.grading = Some(blocks);
        Ok(self)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn comult_matrix(&self) -> &Matrix<F> {
        &self.comult
    }
    pub fn counit(&self) -> &[F::Elem] {
        &self.counit
    }
    pub fn grading(&self) -> Option<&[Vec<usize>]> {
        self.grading.as_deref()
    }

    /// Drops grading metadata, giving the bare structure constants.
    pub fn without_grading(&self) -> Self {
        Coalgebra {
            grading: None,
            ..self.clone()
        }
    }

    /// `d[k][i][j]`
    pub fn d(&self, k: usize, i: usize, j: usize) -> &F::Elem {
        self.comult.get(i * self.dim + j, k)
    }

    pub fn comult_tensor(&self) -> Vec<Vec<Vec<F::Elem>>> {
        let n = self.dim;
        (0..n)
            .map(|k| (0..n).map(|i| (0..n).map(|j| self.d(k, i, j).clone()).collect()).collect())
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        vec_ops::unit(&self.field, self.dim, i)
    }

    /// `Δ(c)` in the tensor basis.
    pub fn delta(&self, c: &[F::Elem]) -> Vec<F::Elem> {
        self.comult.apply(c)
    }

    pub fn counit_of(&self, c: &[F::Elem]) -> F::Elem {
        vec_ops::dot(&self.field, &self.counit, c)
    }

    fn counit_row(&self) -> Matrix<F> {
        Matrix::from_rows(&self.field, self.dim, vec![self.counit.clone()]).unwrap()
    }

    /// Coassociativity and counit laws on every basis vector.
    pub fn verify(&self) -> AxiomReport {
        let n = self.dim;
        let mut report = AxiomReport::default();
        if self.counit.len() != n {
            report.push("counit length", vec![self.counit.len()]);
            return report;
        }
        let eps = self.counit_row();
        for k in 0..n {
            let dk = self.comult.column(k);
            let left = kron_apply_left(&self.comult, &dk, n);
            let right = kron_apply_right(&self.comult, &dk, n);
            for (idx, (a, b)) in left.iter().zip(&right).enumerate() {
                if a != b {
                    report.push("coassociativity", vec![k, idx / (n * n), (idx / n) % n, idx % n]);
                }
            }
            let e = self.basis_vector(k);
            if kron_apply_left(&eps, &dk, n) != e {
                report.push("left counit", vec![k]);
            }
            if kron_apply_right(&eps, &dk, n) != e {
                report.push("right counit", vec![k]);
            }
        }
        report
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|k| (0..n).all(|i| (0..n).all(|j| self.d(k, i, j) == self.d(k, j, i))))
    }

    /// The co-opposite coalgebra `Δ^cop = τ∘Δ`.
    pub fn co_opposite(&self) -> Self {
        let n = self.dim;
        let comult = Matrix::from_fn(&self.field, n * n, n, |row, k| self.d(k, row % n, row / n).clone());
        Coalgebra {
            field: self.field.clone(),
            dim: n,
            comult,
            counit: self.counit.clone(),
            grading: self.grading.clone(),
        }
    }

    /// The dual algebra `C*` with `m[i][j][k] = d[k][i][j]` and unit `ε`.
    pub fn convolution_dual(&self) -> Algebra<F> {
        Algebra::from_mult_matrix(self.comult.transpose(), self.counit.clone())
            .expect("dual of an n-dimensional coalgebra has matching shapes")
    }

    /// Matrix of `c ↦ f ⇀ c`; entry `[i][k] = Σ_j d[k][i][j] f_j`.
    pub fn left_hit_matrix(&self, f: &[F::Elem]) -> Matrix<F> {
        let n = self.dim;
        let fl = &self.field;
        Matrix::from_fn(fl, n, n, |i, k| {
            let mut acc = fl.zero();
            for (j, fj) in f.iter().enumerate() {
                if !fl.is_zero(fj) {
                    acc = fl.add(&acc, &fl.mul(self.d(k, i, j), fj));
                }
            }
            acc
        })
    }

    /// Matrix of `c ↦ c ↼ f`; entry `[j][k] = Σ_i d[k][i][j] f_i`.
    pub fn right_hit_matrix(&self, f: &[F::Elem]) -> Matrix<F> {
        let n = self.dim;
        let fl = &self.field;
        Matrix::from_fn(fl, n, n, |j, k| {
            let mut acc = fl.zero();
            for (i, fi) in f.iter().enumerate() {
                if !fl.is_zero(fi) {
                    acc = fl.add(&acc, &fl.mul(self.d(k, i, j), fi));
                }
            }
            acc
        })
    }

    pub fn hit(&self, side: Side, f: &[F::Elem], c: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if f.len() != self.dim || c.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "hit with vectors of lengths {} and {} in dimension {}",
                f.len(),
                c.len(),
                self.dim
            )));
        }
        Ok(match side {
            Side::Left => self.left_hit_matrix(f).apply(c),
            Side::Right => self.right_hit_matrix(f).apply(c),
        })
    }

    /// The coalgebra as a right comodule over itself: `δ = Δ`.
    pub fn regular_comodule(&self) -> Comodule<F> {
        Comodule::regular(self)
    }

    /// `X ⊗ Y` inside `C ⊗ C`.
    pub fn tensor_subspace(&self, x: &Subspace<F>, y: &Subspace<F>) -> Subspace<F> {
        tensor_subspaces(&self.field, x, y)
    }

    /// `X ∧ Y = Δ⁻¹(X⊗C + C⊗Y)`.
    pub fn wedge(&self, x: &Subspace<F>, y: &Subspace<F>) -> Result<Subspace<F>> {
        for s in [x, y] {
            if s.ambient() != self.dim {
                return Err(Error::AmbientMismatch {
                    left: s.ambient(),
                    right: self.dim,
                });
            }
        }
        let full = Subspace::full(&self.field, self.dim);
        let target = self.tensor_subspace(x, &full).sum(&self.tensor_subspace(&full, y))?;
        target.preimage(&self.comult)
    }

    pub fn is_subcoalgebra(&self, s: &Subspace<F>) -> bool {
        let ss = self.tensor_subspace(s, s);
        s.basis_vecs().iter().all(|v| ss.contains(&self.delta(v)))
    }

    /// `Δ(S) ⊆ S ⊗ C`.
    pub fn is_right_coideal(&self, s: &Subspace<F>) -> bool {
        let sc = self.tensor_subspace(s, &Subspace::full(&self.field, self.dim));
        s.basis_vecs().iter().all(|v| sc.contains(&self.delta(v)))
    }

    /// The subcoalgebra `S` as a coalgebra on its RREF basis.
    pub fn restrict(&self, s: &Subspace<F>) -> Result<Coalgebra<F>> {
        if s.ambient() != self.dim {
            return Err(Error::AmbientMismatch {
                left: s.ambient(),
                right: self.dim,
            });
        }
        let basis = s.basis_vecs();
        let m = basis.len();
        let n = self.dim;
        let piv = s.pivots();
        let mut comult = Matrix::zeros(&self.field, m * m, m);
        for (a, v) in basis.iter().enumerate() {
            let dv = self.delta(v);
            let mut recon = vec![self.field.zero(); n * n];
            for b in 0..m {
                for c in 0..m {
                    let coef = dv[piv[b] * n + piv[c]].clone();
                    if !self.field.is_zero(&coef) {
                        vec_ops::axpy(&self.field, &mut recon, &coef, &vec_ops::tensor(&self.field, &basis[b], &basis[c]));
                    }
                    comult.set(b * m + c, a, coef);
                }
            }
            if recon != dv {
                return Err(Error::InvalidCoalgebra("subspace is not a subcoalgebra".into()));
            }
        }
        let counit = basis.iter().map(|v| self.counit_of(v)).collect();
        Coalgebra::from_comult_matrix(comult, counit)
    }

    /// Formatted constants `d[k][i][j]`.
    pub fn comult_strings(&self) -> Vec<Vec<Vec<String>>> {
        self.comult_tensor()
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.iter().map(|x| self.field.format(x)).collect()).collect())
            .collect()
    }
}

/// `X ⊗ Y` inside the tensor product of their ambient spaces.
pub fn tensor_subspaces<F: Field>(field: &F, x: &Subspace<F>, y: &Subspace<F>) -> Subspace<F> {
    let mut vecs = Vec::with_capacity(x.dim() * y.dim());
    for a in x.basis_vecs() {
        for b in y.basis_vecs() {
            vecs.push(vec_ops::tensor(field, &a, &b));
        }
    }
    Subspace::span(field, x.ambient() * y.ambient(), vecs).expect("tensor vectors fit")
}

pub(crate) fn require_valid<F: Field>(c: &Coalgebra<F>) -> Result<()> {
    let r = c.verify();
    if r.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidCoalgebra(r.summary()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{divided_power, golden_example, truncated_path_coalgebra, GoldenExample, QuiverPresentation};
    use crate::field::Rationals;

    #[test]
    fn broken_counit_is_reported() {
        let q = Rationals;
        // Δ(e0) = e0⊗e1 with ε = (1, 0)
        let c = Coalgebra::from_terms(&q, 2, vec![q.one(), q.zero()], |k| {
            if k == 0 {
                vec![(0, 1, q.one())]
            } else {
                vec![(1, 1, q.one())]
            }
        });
        let r = c.verify();
        assert!(r.violations.iter().any(|v| v.axiom.contains("counit")));
    }

    #[test]
    fn divided_power_hits() {
        let q = Rationals;
        let c = divided_power(&q, 2);
        assert!(c.verify().is_valid());
        let e1 = c.basis_vector(1);
        let c2 = c.basis_vector(2);
        assert_eq!(c.hit(Side::Left, &e1, &c2).unwrap(), c.basis_vector(1));
        let eps = c.counit().to_vec();
        assert_eq!(c.hit(Side::Left, &eps, &c2).unwrap(), c2);
        let a = c.convolution_dual();
        assert_eq!(a.product(&e1, &e1), c.basis_vector(2));
    }

    #[test]
    fn wedges_in_divided_power_and_a2() {
        let q = Rationals;
        let dc = divided_power(&q, 3);
        let c0 = Subspace::coordinate(&q, 4, &[0]);
        assert_eq!(dc.wedge(&c0, &c0).unwrap(), Subspace::coordinate(&q, 4, &[0, 1]));
        let zero = Subspace::zero(&q, 4);
        assert!(dc.wedge(&zero, &zero).unwrap().is_zero());

        let a2 = truncated_path_coalgebra(&q, &QuiverPresentation::a2(), 1).unwrap();
        // basis u, v, a with Δ(a) = u⊗a + a⊗v
        let u = Subspace::coordinate(&q, 3, &[0]);
        let v = Subspace::coordinate(&q, 3, &[1]);
        assert!(a2.wedge(&u, &v).unwrap().is_full());
        assert_eq!(a2.wedge(&v, &u).unwrap(), Subspace::coordinate(&q, 3, &[0, 1]));
    }

    #[test]
    fn golden_ex63_is_valid_and_not_cocommutative() {
        let q = Rationals;
        let c = golden_example(&q, GoldenExample::Ex63).unwrap();
        assert!(c.verify().is_valid());
        assert!(!c.is_cocommutative());
        assert_eq!(c.counit(), &[q.one(), q.zero(), q.zero(), q.zero()]);
    }

    #[test]
    fn restrict_to_coradical() {
        let q = Rationals;
        let dc = divided_power(&q, 3);
        let c1 = Subspace::coordinate(&q, 4, &[0, 1]);
        assert_eq!(dc.restrict(&c1).unwrap(), divided_power(&q, 1).without_grading());
        let not_sub = Subspace::coordinate(&q, 4, &[1]);
        assert!(dc.restrict(&not_sub).is_err());
    }
}
