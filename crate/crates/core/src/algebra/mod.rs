//! Finite-dimensional associative unital algebras given by structure constants.

mod bimodule;
mod chain;
mod division;
mod standard;

pub use bimodule::{bimodule_from_automorphism, verify_bimodule_isomorphism, Bimodule};
pub use chain::{is_left_chain_ring, principal_left_ideal, ChainRingCertificate};
pub use division::{division_check, DivisionCheck};
pub use standard::{
    direct_product, gaussian_conjugation, gaussian_rationals, ground_field, matrix_algebra,
    polynomial_quotient, quaternions, skew_polynomial_quotient, trivial_extension,
};

use crate::error::{Error, Result};
use crate::factor::Factorable;
use crate::field::Field;
use crate::matrix::{vec_ops, Matrix};
use crate::poly::{krylov_minimal_polynomial, Poly};
use crate::report::AxiomReport;
use crate::subspace::Subspace;

/// An algebra on basis `e_0 … e_{n-1}` with `e_i·e_j = Σ_k m[i][j][k] e_k`.
///
/// The constants are kept as an `n x n²` matrix `M` with `M[k][i·n+j] = m[i][j][k]`,
/// so the product of coordinate vectors is `M (a ⊗ b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    mult: Matrix<F>,
    unit: Vec<F::Elem>,
}

impl<F: Field> Algebra<F> {
    /// Builds an algebra from `mult[i][j][k]` and unit coordinates; axioms are not checked.
    pub fn new(field: &F, mult: Vec<Vec<Vec<F::Elem>>>, unit: Vec<F::Elem>) -> Result<Self> {
        let n = unit.len();
        if mult.len() != n || mult.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(Error::DimensionMismatch(format!(
                "multiplication table is not {n}x{n}x{n}"
            )));
        }
        let mut m = Matrix::zeros(field, n, n * n);
        for (i, row) in mult.into_iter().enumerate() {
            for (j, col) in row.into_iter().enumerate() {
                for (k, x) in col.into_iter().enumerate() {
                    m.set(k, i * n + j, x);
                }
            }
        }
        Ok(Algebra {
            field: field.clone(),
            dim: n,
            mult: m,
            unit,
        })
    }

    /// Builds an algebra from a product function on basis indices.
    pub fn from_fn(field: &F, n: usize, unit: Vec<F::Elem>, mut prod: impl FnMut(usize, usize) -> Vec<F::Elem>) -> Self {
        let mut m = Matrix::zeros(field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                for (k, x) in prod(i, j).into_iter().enumerate() {
                    m.set(k, i * n + j, x);
                }
            }
        }
        Algebra {
            field: field.clone(),
            dim: n,
            mult: m,
            unit,
        }
    }

    pub fn from_mult_matrix(mult: Matrix<F>, unit: Vec<F::Elem>) -> Result<Self> {
        let n = unit.len();
        if mult.rows() != n || mult.cols() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "multiplication matrix is {}x{}, expected {n}x{}",
                mult.rows(),
                mult.cols(),
                n * n
            )));
        }
        Ok(Algebra {
            field: mult.field().clone(),
            dim: n,
            mult,
            unit,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }
    pub fn mult_matrix(&self) -> &Matrix<F> {
        &self.mult
    }

    /// `m[i][j][k]`
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        self.mult.get(k, i * self.dim + j)
    }

    pub fn mult_tensor(&self) -> Vec<Vec<Vec<F::Elem>>> {
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|j| self.mult.column(i * n + j)).collect())
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        vec_ops::unit(&self.field, self.dim, i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<F::Elem> {
        self.mult.column(i * self.dim + j)
    }

    pub fn product(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        self.mult.apply(&vec_ops::tensor(&self.field, a, b))
    }

    pub fn power(&self, a: &[F::Elem], k: usize) -> Vec<F::Elem> {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.product(&acc, a);
        }
        acc
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let n = self.dim;
        let f = &self.field;
        let mut out = Matrix::zeros(f, n, n);
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.constant(i, j, k);
                    if !f.is_zero(c) {
                        let v = f.add(out.get(k, j), &f.mul(ai, c));
                        out.set(k, j, v);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let n = self.dim;
        let f = &self.field;
        let mut out = Matrix::zeros(f, n, n);
        for (j, aj) in a.iter().enumerate() {
            if f.is_zero(aj) {
                continue;
            }
            for i in 0..n {
                for k in 0..n {
                    let c = self.constant(i, j, k);
                    if !f.is_zero(c) {
                        let v = f.add(out.get(k, i), &f.mul(aj, c));
                        out.set(k, i, v);
                    }
                }
            }
        }
        out
    }

    /// Associativity and unit laws on all basis triples and pairs.
    pub fn verify(&self) -> AxiomReport {
        let n = self.dim;
        let mut report = AxiomReport::default();
        if self.unit.len() != n {
            report.push("unit length", vec![self.unit.len()]);
            return report;
        }
        let left_units = self.left_mult(&self.unit);
        let right_units = self.right_mult(&self.unit);
        for i in 0..n {
            let e = self.basis_vector(i);
            if left_units.apply(&e) != e {
                report.push("left unit", vec![i]);
            }
            if right_units.apply(&e) != e {
                report.push("right unit", vec![i]);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for l in 0..n {
                    let lhs = self.product(&ij, &self.basis_vector(l));
                    let jl = self.basis_product(j, l);
                    let rhs = self.product(&self.basis_vector(i), &jl);
                    if lhs != rhs {
                        report.push("associativity", vec![i, j, l]);
                    }
                }
            }
        }
        report
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Two-sided inverse, if any.
    pub fn element_inverse(&self, a: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let (b, _) = self.left_mult(a).solve(&self.unit).ok()??;
        (self.product(&b, a) == self.unit).then_some(b)
    }

    pub fn is_unit(&self, a: &[F::Elem]) -> bool {
        self.element_inverse(a).is_some()
    }

    pub fn center(&self) -> Subspace<F> {
        let n = self.dim;
        let mut stacked = Matrix::zeros(&self.field, 0, n);
        for i in 0..n {
            let e = self.basis_vector(i);
            // z·e_i − e_i·z as a linear function of z
            stacked = stacked.vstack(&self.right_mult(&e).sub(&self.left_mult(&e)));
        }
        stacked.kernel()
    }

    /// Minimal polynomial of an element (Krylov sequence of the unit under left multiplication).
    pub fn element_minimal_polynomial(&self, a: &[F::Elem]) -> Poly<F> {
        let la = self.left_mult(a);
        krylov_minimal_polynomial(&self.field, self.unit.clone(), |v| la.apply(v))
    }

    /// `p(a)` inside the algebra.
    pub fn eval_poly(&self, p: &Poly<F>, a: &[F::Elem]) -> Vec<F::Elem> {
        let la = self.left_mult(a);
        let f = &self.field;
        let mut acc = vec_ops::zeros(f, self.dim);
        for c in p.coeffs().iter().rev() {
            acc = la.apply(&acc);
            vec_ops::axpy(f, &mut acc, c, &self.unit);
        }
        acc
    }

    /// Span of all products `x·y` with `x ∈ x_space`, `y ∈ y_space`.
    pub fn subspace_product(&self, x_space: &Subspace<F>, y_space: &Subspace<F>) -> Subspace<F> {
        let mut vecs = Vec::new();
        for x in x_space.basis_vecs() {
            for y in y_space.basis_vecs() {
                vecs.push(self.product(&x, &y));
            }
        }
        Subspace::span(&self.field, self.dim, vecs).expect("products have algebra length")
    }

    /// Left ideal `A·x_space`.
    pub fn left_ideal_generated(&self, x_space: &Subspace<F>) -> Subspace<F> {
        self.subspace_product(&Subspace::full(&self.field, self.dim), x_space)
    }

    pub fn is_left_ideal(&self, s: &Subspace<F>) -> bool {
        self.left_ideal_generated(s).is_subspace_of(s)
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace<F>) -> bool {
        let full = Subspace::full(&self.field, self.dim);
        self.subspace_product(&full, s).is_subspace_of(s) && self.subspace_product(s, &full).is_subspace_of(s)
    }

    /// `I, I², I³, …` down to the first repeated term (0 for a nilpotent ideal).
    pub fn ideal_powers(&self, ideal: &Subspace<F>) -> Vec<Subspace<F>> {
        let mut out = vec![Subspace::full(&self.field, self.dim)];
        let mut cur = ideal.clone();
        loop {
            let stop = out.last() == Some(&cur) || cur.is_zero();
            out.push(cur.clone());
            if stop {
                break;
            }
            cur = self.subspace_product(&cur, ideal);
        }
        if out.len() >= 2 && out[out.len() - 1] == out[out.len() - 2] && !out[out.len() - 1].is_zero() {
            out.pop();
        }
        out
    }

    pub fn is_nilpotent_ideal(&self, ideal: &Subspace<F>) -> bool {
        self.ideal_powers(ideal).last().is_some_and(|s| s.is_zero())
    }

    /// Quotient by a two-sided ideal on the complement basis of non-pivot coordinates.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Algebra<F>> {
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::InvalidAlgebra("quotient by a subspace that is not a two-sided ideal".into()));
        }
        let comp = ideal.complement_indices();
        let m = comp.len();
        let unit = ideal.quotient_coordinates(&self.unit);
        Ok(Algebra::from_fn(&self.field, m, unit, |a, b| {
            ideal.quotient_coordinates(&self.basis_product(comp[a], comp[b]))
        }))
    }

    /// Algebra structure on a subspace closed under multiplication and containing 1.
    pub fn subalgebra(&self, s: &Subspace<F>) -> Result<Algebra<F>> {
        if !s.contains(&self.unit) || !self.subspace_product(s, s).is_subspace_of(s) {
            return Err(Error::InvalidAlgebra("subspace is not a unital subalgebra".into()));
        }
        let basis = s.basis_vecs();
        let unit = s.coordinates(&self.unit).unwrap();
        Ok(Algebra::from_fn(&self.field, basis.len(), unit, |a, b| {
            s.coordinates(&self.product(&basis[a], &basis[b])).unwrap()
        }))
    }

    /// The opposite algebra `a ∘ b = b·a`.
    pub fn opposite(&self) -> Algebra<F> {
        Algebra::from_fn(&self.field, self.dim, self.unit.clone(), |i, j| self.basis_product(j, i))
    }

    /// Algebra spanned by a family of square matrices, closed under products and
    /// containing the identity. Coordinates are taken on the RREF basis of the span.
    pub fn from_matrix_span(field: &F, size: usize, matrices: &[Matrix<F>]) -> Result<(Algebra<F>, Vec<Matrix<F>>)> {
        let flat: Vec<Vec<F::Elem>> = matrices.iter().map(|m| m.data().to_vec()).collect();
        let mut span = Subspace::span(field, size * size, flat)?;
        let id = Matrix::identity(field, size);
        span = span.sum(&Subspace::span(field, size * size, vec![id.data().to_vec()])?)?;
        // close under products
        loop {
            let basis: Vec<Matrix<F>> = span
                .basis_vecs()
                .into_iter()
                .map(|v| Matrix::from_flat(field, size, size, v).unwrap())
                .collect();
            let mut prods = Vec::new();
            for a in &basis {
                for b in &basis {
                    let p = a.mul(b);
                    if !span.contains(p.data()) {
                        prods.push(p.into_data());
                    }
                }
            }
            if prods.is_empty() {
                let unit = span.coordinates(id.data()).unwrap();
                let alg = Algebra::from_fn(field, basis.len(), unit, |i, j| {
                    span.coordinates(basis[i].mul(&basis[j]).data()).unwrap()
                });
                return Ok((alg, basis));
            }
            span = span.sum(&Subspace::span(field, size * size, prods)?)?;
        }
    }

    /// Trace-form radical: `{a : tr(L_{a b}) = 0 for all b}`, valid in characteristic 0 or p > dim.
    pub fn jacobson_radical(&self) -> Result<Subspace<F>> {
        let p = self.field.characteristic();
        if p != 0 && p <= self.dim as u64 {
            return Err(Error::SmallCharacteristic { p, dim: self.dim });
        }
        let n = self.dim;
        let f = &self.field;
        let traces: Vec<F::Elem> = (0..n).map(|k| self.left_mult(&self.basis_vector(k)).trace()).collect();
        let form = Matrix::from_fn(f, n, n, |i, j| {
            let prod = self.basis_product(i, j);
            vec_ops::dot(f, &prod, &traces)
        });
        let radical = form.transpose().kernel();
        if !self.is_two_sided_ideal(&radical) || !self.is_nilpotent_ideal(&radical) {
            return Err(Error::InvalidAlgebra("trace-form radical is not a nilpotent ideal".into()));
        }
        Ok(radical)
    }

    /// The radical, falling back to left-ideal enumeration over small prime fields.
    pub fn radical_with_fallback(&self, cfg: &crate::AnalysisConfig) -> Result<Subspace<F>> {
        match self.jacobson_radical() {
            Err(Error::SmallCharacteristic { .. }) => crate::lattice::radical_by_enumeration(self, cfg),
            other => other,
        }
    }

    /// The dual coalgebra on the dual basis: `Δ(e^k) = Σ m[i][j][k] e^i ⊗ e^j`, `ε = unit`.
    pub fn dual_coalgebra(&self) -> crate::coalgebra::Coalgebra<F> {
        crate::coalgebra::Coalgebra::from_comult_matrix(self.mult.transpose(), self.unit.clone())
            .expect("dual of an n-dimensional algebra has matching shapes")
    }

    /// Formatted constants `m[i][j][k]`.
    pub fn mult_strings(&self) -> Vec<Vec<Vec<String>>> {
        self.mult_tensor()
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.iter().map(|x| self.field.format(x)).collect()).collect())
            .collect()
    }
}

/// Checks that `theta` is a unital algebra homomorphism `a → b` (columns are images of basis vectors).
pub fn verify_homomorphism<F: Field>(a: &Algebra<F>, b: &Algebra<F>, theta: &Matrix<F>) -> AxiomReport {
    let mut report = AxiomReport::default();
    if theta.rows() != b.dim() || theta.cols() != a.dim() {
        report.push("shape", vec![theta.rows(), theta.cols()]);
        return report;
    }
    if theta.apply(a.unit()) != b.unit() {
        report.push("unit preserved", vec![]);
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = theta.apply(&a.basis_product(i, j));
            let rhs = b.product(&theta.column(i), &theta.column(j));
            if lhs != rhs {
                report.push("multiplicative", vec![i, j]);
            }
        }
    }
    report
}

/// Invertibility, unit preservation and multiplicativity of `theta` on `d`.
pub fn verify_automorphism<F: Field>(d: &Algebra<F>, theta: &Matrix<F>) -> AxiomReport {
    let mut report = AxiomReport::default();
    if theta.rows() != d.dim() || theta.cols() != d.dim() {
        report.push("shape", vec![theta.rows(), theta.cols()]);
        return report;
    }
    if !theta.is_invertible() {
        report.push("invertible", vec![]);
    }
    report.merge(verify_homomorphism(d, d, theta));
    report
}

pub(crate) fn require_automorphism<F: Field>(d: &Algebra<F>, theta: &Matrix<F>, name: &str) -> Result<()> {
    let r = verify_automorphism(d, theta);
    if r.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidAutomorphism(format!("{name}: {}", r.summary())))
    }
}

pub(crate) fn require_valid<F: Field>(a: &Algebra<F>) -> Result<()> {
    let r = a.verify();
    if r.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidAlgebra(r.summary()))
    }
}

/// Whether the algebra is semisimple; over small characteristic this uses the enumeration fallback.
pub fn is_semisimple<F: Factorable>(a: &Algebra<F>, cfg: &crate::AnalysisConfig) -> Result<bool> {
    Ok(a.radical_with_fallback(cfg)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn truncated_polynomial_is_valid() {
        let q = Rationals;
        let a = polynomial_quotient(&q, &Poly::from_i64(&q, &[0, 0, 0, 1])).unwrap();
        assert!(a.verify().is_valid());
        assert!(a.is_commutative());
    }

    #[test]
    fn broken_unit_is_reported() {
        let q = Rationals;
        // e0·e0 = e1, everything else zero, unit e0
        let a = Algebra::from_fn(&q, 2, vec![q.one(), q.zero()], |i, j| {
            if (i, j) == (0, 0) {
                vec![q.zero(), q.one()]
            } else {
                vec![q.zero(), q.zero()]
            }
        });
        let r = a.verify();
        assert!(r.violations.iter().any(|v| v.axiom.contains("unit")));
    }

    #[test]
    fn quaternions_valid_with_scalar_center() {
        let q = Rationals;
        let h = quaternions(&q, -1, -1);
        assert!(h.verify().is_valid());
        assert_eq!(h.center(), Subspace::span(&q, 4, vec![h.unit().to_vec()]).unwrap());
    }

    #[test]
    fn matrix_algebra_center_is_scalars() {
        let q = Rationals;
        let m2 = matrix_algebra(&q, 2);
        assert!(m2.verify().is_valid());
        assert_eq!(m2.center(), Subspace::span(&q, 4, vec![m2.unit().to_vec()]).unwrap());
    }

    #[test]
    fn inverses() {
        let q = Rationals;
        let c = gaussian_rationals(&q);
        assert_eq!(c.element_inverse(c.unit()).unwrap(), c.unit().to_vec());
        let half = q.parse("1/2").unwrap();
        let inv = c.element_inverse(&[q.one(), q.one()]).unwrap();
        assert_eq!(inv, vec![half.clone(), q.neg(&half)]);
        let dual_numbers = polynomial_quotient(&q, &Poly::from_i64(&q, &[0, 0, 1])).unwrap();
        assert!(dual_numbers.element_inverse(&[q.zero(), q.one()]).is_none());
    }

    #[test]
    fn radicals() {
        let q = Rationals;
        assert!(gaussian_rationals(&q).jacobson_radical().unwrap().is_zero());
        let a = polynomial_quotient(&q, &Poly::from_i64(&q, &[0, 0, 0, 1])).unwrap();
        assert_eq!(a.jacobson_radical().unwrap(), Subspace::coordinate(&q, 3, &[1, 2]));
        let c = gaussian_rationals(&q);
        let conj = gaussian_conjugation(&q);
        let te = trivial_extension(&c, &conj, &Matrix::identity(&q, 2)).unwrap();
        let j = te.jacobson_radical().unwrap();
        assert_eq!(j, Subspace::coordinate(&q, 4, &[2, 3]));
        assert!(te.subspace_product(&j, &j).is_zero());
    }

    #[test]
    fn small_characteristic_is_refused() {
        let f = crate::field::PrimeField::new(2).unwrap();
        let a = polynomial_quotient(&f, &Poly::from_i64(&f, &[0, 0, 1])).unwrap();
        assert!(matches!(a.jacobson_radical(), Err(Error::SmallCharacteristic { p: 2, dim: 2 })));
    }

    #[test]
    fn automorphism_checks() {
        let q = Rationals;
        let c = gaussian_rationals(&q);
        assert!(verify_automorphism(&c, &Matrix::identity(&q, 2)).is_valid());
        assert!(verify_automorphism(&c, &gaussian_conjugation(&q)).is_valid());
        let swap = Matrix::from_i64(&q, &[&[0, 1], &[1, 0]]);
        let r = verify_automorphism(&c, &swap);
        assert!(r.violations.iter().any(|v| v.axiom == "unit preserved"));
    }

    #[test]
    fn double_duality() {
        let q = Rationals;
        let c = gaussian_rationals(&q);
        let a = skew_polynomial_quotient(&c, &gaussian_conjugation(&q), 2).unwrap();
        assert_eq!(a.dual_coalgebra().convolution_dual(), a);
    }
}
