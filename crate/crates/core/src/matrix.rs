//! Dense matrices over an exact field.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::subspace::Subspace;

/// Row-major dense matrix. Equality, hashing and ordering look only at shape and entries.
#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}
impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> Hash for Matrix<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl<F: Field> PartialOrd for Matrix<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<F: Field> Ord for Matrix<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols, &self.data).cmp(&(other.rows, other.cols, &other.data))
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.descriptor())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Vector helpers shared by the linear-algebra code.
pub mod vec_ops {
    use crate::field::Field;

    pub fn zeros<F: Field>(field: &F, n: usize) -> Vec<F::Elem> {
        vec![field.zero(); n]
    }

    pub fn unit<F: Field>(field: &F, n: usize, i: usize) -> Vec<F::Elem> {
        let mut v = zeros(field, n);
        v[i] = field.one();
        v
    }

    pub fn add<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
    }

    pub fn sub<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
    }

    pub fn scale<F: Field>(field: &F, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().map(|x| field.mul(c, x)).collect()
    }

    /// `a += c * b`
    pub fn axpy<F: Field>(field: &F, a: &mut [F::Elem], c: &F::Elem, b: &[F::Elem]) {
        if field.is_zero(c) {
            return;
        }
        for (x, y) in a.iter_mut().zip(b) {
            if !field.is_zero(y) {
                *x = field.add(x, &field.mul(c, y));
            }
        }
    }

    pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
        let mut acc = field.zero();
        for (x, y) in a.iter().zip(b) {
            if !field.is_zero(x) && !field.is_zero(y) {
                acc = field.add(&acc, &field.mul(x, y));
            }
        }
        acc
    }

    pub fn is_zero<F: Field>(field: &F, a: &[F::Elem]) -> bool {
        a.iter().all(|x| field.is_zero(x))
    }

    /// Coordinates of `a ⊗ b` in the lexicographic tensor basis.
    pub fn tensor<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(field.mul(x, y));
            }
        }
        out
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_flat(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from rows; an empty row list yields a `0 x cols` matrix.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Self::from_flat(field, n, cols, data)
    }

    pub fn from_columns(field: &F, rows: usize, columns: Vec<Vec<F::Elem>>) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, c) in columns.into_iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has {} entries, expected {rows}",
                    c.len()
                )));
            }
            for (i, x) in c.into_iter().enumerate() {
                m.data[i * cols + j] = x;
            }
        }
        Ok(m)
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn diagonal(field: &F, diag: &[F::Elem]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(field, n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn into_data(self) -> Vec<F::Elem> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let orow = other.row(k);
                let start = i * other.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !f.is_zero(b) {
                        let cell = &mut out.data[start + j];
                        *cell = f.add(cell, &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on incompatible shapes.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix product shape")
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape");
        (0..self.rows)
            .map(|r| vec_ops::dot(&self.field, self.row(r), v))
            .collect()
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.rows, "vector-matrix shape");
        let mut out = vec_ops::zeros(&self.field, self.cols);
        for (r, c) in v.iter().enumerate() {
            vec_ops::axpy(&self.field, &mut out, c, self.row(r));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: vec_ops::add(&self.field, &self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape");
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: vec_ops::sub(&self.field, &self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: vec_ops::scale(&self.field, c, &self.data),
        }
    }

    /// Matrix of `self ⊗ other` on the lexicographic tensor basis (left factor major).
    pub fn kronecker(&self, other: &Self) -> Self {
        let f = &self.field;
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Self::zeros(f, self.rows * r2, self.cols * c2);
        let oc = out.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.data[(i * r2 + k) * oc + j * c2 + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column count");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row count");
        Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(&self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Matrix::from_fn(&self.field, rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Reduced row-echelon form (zero rows dropped) and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut rows: Vec<Vec<F::Elem>> = self
            .row_vecs()
            .into_iter()
            .filter(|r| !vec_ops::is_zero(f, r))
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == rows.len() {
                break;
            }
            let Some(p) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][c])) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = f.inv(&rows[rank][c]).expect("nonzero pivot");
            if !f.is_one(&inv) {
                let scaled = vec_ops::scale(f, &inv, &rows[rank]);
                rows[rank] = scaled;
            }
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == rank || f.is_zero(&row[c]) {
                    continue;
                }
                let factor = f.neg(&row[c]);
                vec_ops::axpy(f, row, &factor, &pivot_row);
            }
            pivots.push(c);
            rank += 1;
        }
        rows.truncate(rank);
        let m = Matrix::from_rows(f, self.cols, rows).expect("rref shape");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel `{x : self·x = 0}` as a subspace of the column space dimension.
    pub fn kernel(&self) -> Subspace<F> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![None; n];
        for (i, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec_ops::zeros(f, n);
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::span(f, n, basis).expect("kernel vectors have ambient length")
    }

    /// Subspace spanned by the rows.
    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_matrix(self)
    }

    /// Subspace spanned by the columns (the image of the map).
    pub fn image(&self) -> Subspace<F> {
        Subspace::from_matrix(&self.transpose())
    }

    /// One solution of `self·x = b` plus the kernel, or `None` when inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<(Vec<F::Elem>, Subspace<F>)>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} entries, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let aug = self.hstack(&Matrix::from_columns(f, self.rows, vec![b.to_vec()])?);
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec_ops::zeros(f, self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(Some((x, self.kernel())))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let aug = self.hstack(&Matrix::identity(f, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(f, n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.rows.min(self.cols) {
            acc = f.add(&acc, self.get(i, i));
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Entries formatted as report strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| self.field.format(x)).collect())
            .collect()
    }
}

/// `(A ⊗ I_r) v` without forming the Kronecker product.
pub fn kron_apply_left<F: Field>(a: &Matrix<F>, v: &[F::Elem], r: usize) -> Vec<F::Elem> {
    let f = a.field();
    assert_eq!(v.len(), a.cols() * r, "tensor vector length");
    let mut out = vec_ops::zeros(f, a.rows() * r);
    for i in 0..a.cols() {
        for t in 0..r {
            let x = &v[i * r + t];
            if f.is_zero(x) {
                continue;
            }
            for k in 0..a.rows() {
                let c = a.get(k, i);
                if !f.is_zero(c) {
                    out[k * r + t] = f.add(&out[k * r + t], &f.mul(c, x));
                }
            }
        }
    }
    out
}

/// `(I_l ⊗ B) v` without forming the Kronecker product.
pub fn kron_apply_right<F: Field>(b: &Matrix<F>, v: &[F::Elem], l: usize) -> Vec<F::Elem> {
    let c = b.cols();
    assert_eq!(v.len(), l * c, "tensor vector length");
    let mut out = Vec::with_capacity(l * b.rows());
    for s in 0..l {
        out.extend(b.apply(&v[s * c..(s + 1) * c]));
    }
    out
}

/// Solution of the linear system `A x = b` together with the kernel of `A`.
pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &[F::Elem]) -> Result<Option<(Vec<F::Elem>, Subspace<F>)>> {
    a.solve(b)
}

/// Matrix of `L1 ⊗ L2` on the lexicographic tensor basis.
pub fn kronecker<F: Field>(l1: &Matrix<F>, l2: &Matrix<F>) -> Matrix<F> {
    l1.kronecker(l2)
}
