//! Right comodules over a fixed coalgebra.

use std::sync::Arc;

use super::Coalgebra;
use crate::algebra::{division_check, Algebra};
use crate::error::{Error, Result};
use crate::factor::Factorable;
use crate::field::Field;
use crate::matrix::{kron_apply_left, kron_apply_right, vec_ops, Matrix};
use crate::report::{AxiomReport, Certainty, Verdict};
use crate::subspace::Subspace;
use crate::AnalysisConfig;

/// A right comodule `δ(m_a) = Σ r[a][b][k] m_b ⊗ c_k`.
///
/// The coaction is an `(m·n) x m` matrix whose column `a` is `δ(m_a)` in the basis
/// `m_b ⊗ c_k ↦ b·n + k`. The dual algebra acts on the left by `f ⇀ m = (id⊗f)δ(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<F: Field> {
    coalgebra: Arc<Coalgebra<F>>,
    dim: usize,
    coaction: Matrix<F>,
}

/// Three-valued simplicity answer with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityCheck {
    pub verdict: Verdict,
    pub certainty: Option<Certainty>,
    pub note: String,
}

impl<F: Field> Comodule<F> {
    pub fn new(coalgebra: Arc<Coalgebra<F>>, dim: usize, coaction: Matrix<F>) -> Result<Self> {
        let n = coalgebra.dim();
        if coaction.rows() != dim * n || coaction.cols() != dim {
            return Err(Error::InvalidComodule(format!(
                "coaction matrix is {}x{}, expected {}x{dim}",
                coaction.rows(),
                coaction.cols(),
                dim * n
            )));
        }
        Ok(Comodule {
            coalgebra,
            dim,
            coaction,
        })
    }

    /// `C` as a right comodule over itself.
    pub fn regular(c: &Coalgebra<F>) -> Self {
        Comodule {
            coalgebra: Arc::new(c.clone()),
            dim: c.dim(),
            coaction: c.comult_matrix().clone(),
        }
    }

    pub fn coalgebra(&self) -> &Arc<Coalgebra<F>> {
        &self.coalgebra
    }
    pub fn field(&self) -> &F {
        self.coalgebra.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn coaction_matrix(&self) -> &Matrix<F> {
        &self.coaction
    }

    pub fn coact(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.coaction.apply(v)
    }

    /// Coassociativity and counit laws on basis vectors.
    pub fn verify(&self) -> AxiomReport {
        let c = &self.coalgebra;
        let n = c.dim();
        let mut report = AxiomReport::default();
        let eps = Matrix::from_rows(c.field(), n, vec![c.counit().to_vec()]).unwrap();
        for a in 0..self.dim {
            let da = self.coaction.column(a);
            let lhs = kron_apply_left(&self.coaction, &da, n);
            let rhs = kron_apply_right(c.comult_matrix(), &da, self.dim);
            if lhs != rhs {
                report.push("coassociativity", vec![a]);
            }
            if kron_apply_right(&eps, &da, self.dim) != vec_ops::unit(c.field(), self.dim, a) {
                report.push("counit", vec![a]);
            }
        }
        report
    }

    /// Matrix of `m ↦ f ⇀ m`; entry `[b][a] = Σ_k r[a][b][k] f_k`.
    pub fn action_matrix(&self, f: &[F::Elem]) -> Matrix<F> {
        let n = self.coalgebra.dim();
        let fl = self.field();
        let mut out = Matrix::zeros(fl, self.dim, self.dim);
        for a in 0..self.dim {
            for b in 0..self.dim {
                let mut acc = fl.zero();
                for (k, fk) in f.iter().enumerate() {
                    let r = self.coaction.get(b * n + k, a);
                    if !fl.is_zero(fk) && !fl.is_zero(r) {
                        acc = fl.add(&acc, &fl.mul(r, fk));
                    }
                }
                out.set(b, a, acc);
            }
        }
        out
    }

    /// Action matrices of the dual basis functionals `e^k`.
    pub fn basis_actions(&self) -> Vec<Matrix<F>> {
        (0..self.coalgebra.dim())
            .map(|k| self.action_matrix(&self.coalgebra.basis_vector(k)))
            .collect()
    }

    /// `{m : g ⇀ m = 0 for all g ∈ ideal}`.
    pub fn annihilated_by(&self, ideal: &Subspace<F>) -> Subspace<F> {
        let mut stacked = Matrix::zeros(self.field(), 0, self.dim);
        for g in ideal.basis_vecs() {
            stacked = stacked.vstack(&self.action_matrix(&g));
        }
        stacked.kernel()
    }

    /// `{f ∈ C* : f ⇀ N = 0}` for a subspace `N`.
    pub fn annihilator(&self, n: &Subspace<F>) -> Subspace<F> {
        let cdim = self.coalgebra.dim();
        let fl = self.field();
        // f ⇀ v = Σ_k f_k (action of e^k) v, linear in f
        let actions = self.basis_actions();
        let mut rows = Matrix::zeros(fl, 0, cdim);
        for v in n.basis_vecs() {
            let cols: Vec<Vec<F::Elem>> = actions.iter().map(|m| m.apply(&v)).collect();
            rows = rows.vstack(&Matrix::from_columns(fl, self.dim, cols).unwrap());
        }
        rows.kernel()
    }

    pub fn is_subcomodule(&self, s: &Subspace<F>) -> bool {
        let target = super::tensor_subspaces(self.field(), s, &Subspace::full(self.field(), self.coalgebra.dim()));
        s.basis_vecs().iter().all(|v| target.contains(&self.coact(v)))
    }

    /// The subcomodule `S` on its RREF basis.
    pub fn restrict(&self, s: &Subspace<F>) -> Result<Comodule<F>> {
        let n = self.coalgebra.dim();
        let fl = self.field();
        let basis = s.basis_vecs();
        let piv = s.pivots();
        let m = basis.len();
        let mut coaction = Matrix::zeros(fl, m * n, m);
        for (a, v) in basis.iter().enumerate() {
            let dv = self.coact(v);
            let mut recon = vec_ops::zeros(fl, self.dim * n);
            for b in 0..m {
                for k in 0..n {
                    let coef = dv[piv[b] * n + k].clone();
                    if !fl.is_zero(&coef) {
                        for (idx, x) in basis[b].iter().enumerate() {
                            if !fl.is_zero(x) {
                                recon[idx * n + k] = fl.add(&recon[idx * n + k], &fl.mul(&coef, x));
                            }
                        }
                    }
                    coaction.set(b * n + k, a, coef);
                }
            }
            if recon != dv {
                return Err(Error::InvalidComodule("subspace is not a subcomodule".into()));
            }
        }
        Comodule::new(self.coalgebra.clone(), m, coaction)
    }

    /// `M / S` on the complement basis of standard vectors at non-pivot columns of `S`.
    pub fn quotient(&self, s: &Subspace<F>) -> Result<Comodule<F>> {
        if !self.is_subcomodule(s) {
            return Err(Error::InvalidComodule("quotient by a subspace that is not a subcomodule".into()));
        }
        let n = self.coalgebra.dim();
        let fl = self.field();
        let comp = s.complement_indices();
        let q = comp.len();
        let mut coaction = Matrix::zeros(fl, q * n, q);
        for (a, &src) in comp.iter().enumerate() {
            let dv = self.coaction.column(src);
            for k in 0..n {
                let slice: Vec<F::Elem> = (0..self.dim).map(|b| dv[b * n + k].clone()).collect();
                for (b, x) in s.quotient_coordinates(&slice).into_iter().enumerate() {
                    coaction.set(b * n + k, a, x);
                }
            }
        }
        Comodule::new(self.coalgebra.clone(), q, coaction)
    }

    pub fn direct_sum(&self, other: &Comodule<F>) -> Result<Comodule<F>> {
        if self.coalgebra != other.coalgebra {
            return Err(Error::InvalidComodule("direct sum over different coalgebras".into()));
        }
        let n = self.coalgebra.dim();
        let (m1, m2) = (self.dim, other.dim);
        let m = m1 + m2;
        let mut coaction = Matrix::zeros(self.field(), m * n, m);
        for a in 0..m1 {
            for b in 0..m1 {
                for k in 0..n {
                    coaction.set(b * n + k, a, self.coaction.get(b * n + k, a).clone());
                }
            }
        }
        for a in 0..m2 {
            for b in 0..m2 {
                for k in 0..n {
                    coaction.set((m1 + b) * n + k, m1 + a, other.coaction.get(b * n + k, a).clone());
                }
            }
        }
        Comodule::new(self.coalgebra.clone(), m, coaction)
    }

    /// Comodule maps `T: self → other`, as a subspace of row-major `other.dim x self.dim` matrices.
    pub fn hom_space(&self, other: &Comodule<F>) -> Result<Subspace<F>> {
        if self.coalgebra != other.coalgebra {
            return Err(Error::InvalidComodule("hom space between comodules over different coalgebras".into()));
        }
        let fl = self.field();
        let (m, p) = (self.dim, other.dim);
        let mut stacked = Matrix::zeros(fl, 0, p * m);
        let im = Matrix::identity(fl, m);
        let ip = Matrix::identity(fl, p);
        for (am, an) in self.basis_actions().into_iter().zip(other.basis_actions()) {
            // vec(A T − T B) = (A ⊗ I − I ⊗ Bᵀ) vec(T)
            let eq = an.kronecker(&im).sub(&ip.kronecker(&am.transpose()));
            stacked = stacked.vstack(&eq);
        }
        Ok(stacked.kernel())
    }

    /// Basis of `hom_space` as matrices.
    pub fn hom_basis(&self, other: &Comodule<F>) -> Result<Vec<Matrix<F>>> {
        let (m, p) = (self.dim, other.dim);
        Ok(self
            .hom_space(other)?
            .basis_vecs()
            .into_iter()
            .map(|v| Matrix::from_flat(self.field(), p, m, v).unwrap())
            .collect())
    }

    /// Image of the dual algebra in `End_k(M)` with its matrix basis.
    pub fn image_algebra(&self) -> Result<(Algebra<F>, Vec<Matrix<F>>)> {
        Algebra::from_matrix_span(self.field(), self.dim, &self.basis_actions())
    }

    /// Endomorphism algebra, acting by matrices on `M`.
    pub fn endomorphism_algebra(&self) -> Result<(Algebra<F>, Vec<Matrix<F>>)> {
        let basis = self.hom_basis(self)?;
        Algebra::from_matrix_span(self.field(), self.dim, &basis)
    }

    pub fn socle_with(&self, radical: &Subspace<F>) -> Subspace<F> {
        self.annihilated_by(radical)
    }

    /// `M_n = {m : J^{n+1} ⇀ m = 0}` for the given radical powers `J⁰ ⊇ J ⊇ …`.
    pub fn loewy_with(&self, powers: &[Subspace<F>]) -> Vec<Subspace<F>> {
        let mut out = Vec::new();
        for p in powers.iter().skip(1) {
            let term = self.annihilated_by(p);
            let done = term.is_full();
            out.push(term);
            if done {
                break;
            }
        }
        out
    }
}

impl<F: Factorable> Comodule<F> {
    fn dual_radical(&self, cfg: &AnalysisConfig) -> Result<Subspace<F>> {
        self.coalgebra.convolution_dual().radical_with_fallback(cfg)
    }

    /// `{m : J ⇀ m = 0}` with `J` the radical of the dual algebra.
    pub fn socle(&self, cfg: &AnalysisConfig) -> Result<Subspace<F>> {
        Ok(self.socle_with(&self.dual_radical(cfg)?))
    }

    pub fn loewy_filtration(&self, cfg: &AnalysisConfig) -> Result<Vec<Subspace<F>>> {
        let a = self.coalgebra.convolution_dual();
        let j = a.radical_with_fallback(cfg)?;
        Ok(self.loewy_with(&a.ideal_powers(&j)))
    }

    /// Simple iff nonzero, semisimple (the image algebra has zero radical) and with a
    /// division endomorphism algebra.
    pub fn is_simple(&self, cfg: &AnalysisConfig) -> Result<SimplicityCheck> {
        if self.dim == 0 {
            return Ok(SimplicityCheck {
                verdict: Verdict::No,
                certainty: None,
                note: "zero comodule".into(),
            });
        }
        let (image, _) = self.image_algebra()?;
        if !image.radical_with_fallback(cfg)?.is_zero() {
            return Ok(SimplicityCheck {
                verdict: Verdict::No,
                certainty: None,
                note: "not semisimple".into(),
            });
        }
        let (end, _) = self.endomorphism_algebra()?;
        let dc = division_check(&end, cfg)?;
        Ok(SimplicityCheck {
            verdict: dc.verdict,
            certainty: dc.certainty,
            note: format!("endomorphism algebra of dimension {}: {}", end.dim(), dc.note),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{divided_power, golden_example, GoldenExample};
    use crate::field::Rationals;

    #[test]
    fn simple_pieces_of_divided_power() {
        let q = Rationals;
        let cfg = AnalysisConfig::default();
        let m = divided_power(&q, 3).regular_comodule();
        assert!(m.verify().is_valid());
        let soc = m.socle(&cfg).unwrap();
        assert_eq!(soc, Subspace::coordinate(&q, 4, &[0]));
        let s = m.restrict(&soc).unwrap();
        assert_eq!(s.is_simple(&cfg).unwrap().verdict, Verdict::Yes);
        assert_eq!(m.is_simple(&cfg).unwrap().verdict, Verdict::No);
        let ss = s.direct_sum(&s).unwrap();
        assert_eq!(ss.is_simple(&cfg).unwrap().verdict, Verdict::No);
        assert_eq!(m.hom_space(&m).unwrap().dim(), 4);
        let layers: Vec<usize> = m.loewy_filtration(&cfg).unwrap().iter().map(|s| s.dim()).collect();
        assert_eq!(layers, vec![1, 2, 3, 4]);
    }

    #[test]
    fn gaussian_simple_has_two_dimensional_endomorphisms() {
        let q = Rationals;
        let cfg = AnalysisConfig::default();
        let c = golden_example(&q, GoldenExample::Ex63).unwrap();
        let m = c.regular_comodule();
        let soc = m.socle(&cfg).unwrap();
        assert_eq!(soc.dim(), 2);
        let s = m.restrict(&soc).unwrap();
        assert_eq!(s.hom_space(&s).unwrap().dim(), 2);
        let check = s.is_simple(&cfg).unwrap();
        assert_eq!(check.verdict, Verdict::Yes);
        assert_eq!(check.certainty, Some(Certainty::Exact));
    }

    #[test]
    fn quotient_layers_of_divided_power() {
        let q = Rationals;
        let m = divided_power(&q, 2).regular_comodule();
        let c0 = Subspace::coordinate(&q, 3, &[0]);
        let quot = m.quotient(&c0).unwrap();
        assert!(quot.verify().is_valid());
        assert_eq!(quot.dim(), 2);
    }
}
