//! Subspaces of `F^n` stored in canonical reduced row-echelon form.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{vec_ops, Matrix};

/// A subspace of `F^ambient`. The basis is the RREF of any spanning set, so two
/// subspaces are equal exactly when their bases are equal.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}
impl<F: Field> Eq for Subspace<F> {}

impl<F: Field> Hash for Subspace<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.basis.hash(state);
    }
}

impl<F: Field> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by ambient, then dimension, then basis entries.
impl<F: Field> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.dim())
            .cmp(&(other.ambient, other.dim()))
            .then_with(|| self.basis.data().cmp(other.basis.data()))
    }
}

impl<F: Field> Subspace<F> {
    pub fn span(field: &F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Result<Self> {
        let m = Matrix::from_rows(field, ambient, vectors)?;
        Ok(Self::from_matrix(&m))
    }

    /// Row space of a matrix.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let (basis, pivots) = m.rref();
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: &F, ambient: usize, indices: &[usize]) -> Self {
        let vecs = indices.iter().map(|&i| vec_ops::unit(field, ambient, i)).collect();
        Self::span(field, ambient, vecs).expect("coordinate vectors fit the ambient space")
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }
    pub fn basis_vecs(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vecs()
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let coords: Vec<F::Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.basis.apply_left(&coords) == v).then_some(coords)
    }

    /// `v` minus its combination of basis rows read at the pivots; zero exactly when `v` lies inside.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !f.is_zero(&out[p]) {
                let c = f.neg(&out[p]);
                vec_ops::axpy(f, &mut out, &c, self.basis.row(r));
            }
        }
        out
    }

    /// Coordinates of the class of `v` in the quotient by this subspace, on the
    /// complement basis of standard vectors at non-pivot columns.
    pub fn quotient_coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.reduce(v);
        self.complement_indices().into_iter().map(|c| r[c].clone()).collect()
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)))
    }

    /// `{x : <x, b> = 0}` for every basis vector `b`, under the standard pairing.
    pub fn orthogonal(&self) -> Self {
        self.basis.kernel()
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let stacked = self.orthogonal().basis.vstack(&other.orthogonal().basis);
        Ok(stacked.kernel())
    }

    /// Image under the linear map `l`, which must have `ambient` columns.
    pub fn image(&self, l: &Matrix<F>) -> Result<Self> {
        if l.cols() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "map has {} columns, subspace lives in dimension {}",
                l.cols(),
                self.ambient
            )));
        }
        let columns = self.basis.transpose();
        Ok(l.mul(&columns).image())
    }

    /// `{x : l·x ∈ self}`.
    pub fn preimage(&self, l: &Matrix<F>) -> Result<Self> {
        if l.rows() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "map has {} rows, subspace lives in dimension {}",
                l.rows(),
                self.ambient
            )));
        }
        let q = self.orthogonal();
        Ok(q.basis.mul(l).kernel())
    }

    /// Standard basis vectors at the non-pivot columns; spans a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    pub fn complement(&self) -> Self {
        Self::coordinate(self.field(), self.ambient, &self.complement_indices())
    }

    /// Formatted RREF basis for reports.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.basis.to_strings()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn intersection_and_sum() {
        let q = Rationals;
        let u = Subspace::coordinate(&q, 3, &[0, 1]);
        let w = Subspace::coordinate(&q, 3, &[1, 2]);
        assert_eq!(u.intersect(&w).unwrap(), Subspace::coordinate(&q, 3, &[1]));
        assert!(u.sum(&w).unwrap().is_full());
        assert!(matches!(
            u.sum(&Subspace::zero(&q, 2)),
            Err(Error::AmbientMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn gf2_diagonal_lines() {
        let f = PrimeField::new(2).unwrap();
        let d = Subspace::span(&f, 2, vec![vec![1, 1]]).unwrap();
        let x = Subspace::coordinate(&f, 2, &[0]);
        assert!(d.intersect(&x).unwrap().is_zero());
        assert!(d.contains(&[1, 1]));
        assert!(!d.contains(&[1, 0]));
        // over GF(2) the line x=y is its own orthogonal
        assert_eq!(d.orthogonal(), d);
    }

    #[test]
    fn preimage_of_projection() {
        let q = Rationals;
        let proj = Matrix::from_i64(&q, &[&[1, 0, 0], &[0, 1, 0]]);
        let target = Subspace::coordinate(&q, 2, &[0]);
        let pre = target.preimage(&proj).unwrap();
        assert_eq!(pre, Subspace::coordinate(&q, 3, &[0, 2]));
        assert_eq!(pre.image(&proj).unwrap(), target);
    }

    #[test]
    fn coordinates_reconstruct() {
        let q = Rationals;
        let s = Subspace::span(&q, 3, vec![
            vec![q.from_i64(1), q.from_i64(2), q.from_i64(3)],
            vec![q.from_i64(0), q.from_i64(1), q.from_i64(1)],
        ])
        .unwrap();
        let v = vec![q.from_i64(2), q.from_i64(5), q.from_i64(7)];
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.basis().apply_left(&c), v);
        assert!(s.coordinates(&[q.one(), q.zero(), q.zero()]).is_none());
    }
}
