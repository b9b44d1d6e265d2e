//! Univariate polynomials over an exact field.

use std::fmt;

use crate::field::Field;
use crate::matrix::{vec_ops, Matrix};

/// Polynomial with coefficients stored lowest degree first, trailing zeros removed.
#[derive(Clone)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl<F: Field> Eq for Poly<F> {}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl<F: Field> Poly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_i64(field: &F, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &F) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c · x^k`
    pub fn monomial(field: &F, c: F::Elem, k: usize) -> Self {
        let mut v = vec![field.zero(); k + 1];
        v[k] = c;
        Self::new(field, v)
    }

    pub fn x(field: &F) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> F::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self::new(&self.field, vec_ops::scale(&self.field, c, &self.coeffs))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|k| f.add(&self.coeff(k), &other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|k| f.sub(&self.coeff(k), &other.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !f.is_zero(b) {
                    out[i + j] = f.add(&out[i + j], &f.mul(a, b));
                }
            }
        }
        Self::new(f, out)
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(d.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, dc));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(f, quot), Self::new(f, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = s·self + t·other` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = f.inv(l).unwrap();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| f.mul(&f.from_i64(k as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// `p(L)` for a square matrix `L`.
    pub fn eval_matrix(&self, l: &Matrix<F>) -> Matrix<F> {
        let f = &self.field;
        let n = l.rows();
        let mut acc = Matrix::zeros(f, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(l).add(&Matrix::identity(f, n).scale(c));
        }
        acc
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let c = f.format(c);
            parts.push(match k {
                0 => c,
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{k}"),
            });
        }
        parts.join(" + ")
    }
}

/// Minimal relation of a Krylov sequence `v, T v, T² v, …`: the monic polynomial
/// `p` of least degree with `p(T) v = 0`. An empty sequence (v = 0) yields `1`.
pub fn krylov_minimal_polynomial<F: Field>(
    field: &F,
    start: Vec<F::Elem>,
    mut step: impl FnMut(&[F::Elem]) -> Vec<F::Elem>,
) -> Poly<F> {
    // echelon rows: (pivot column, reduced vector, combination of powers)
    let mut rows: Vec<(usize, Vec<F::Elem>, Vec<F::Elem>)> = Vec::new();
    let mut current = start;
    let max = current.len() + 1;
    for k in 0..=max {
        let mut v = current.clone();
        let mut combo = vec![field.zero(); k + 1];
        combo[k] = field.one();
        for (p, row, rc) in &rows {
            if field.is_zero(&v[*p]) {
                continue;
            }
            let c = field.neg(&v[*p]);
            vec_ops::axpy(field, &mut v, &c, row);
            let mut rc_ext = rc.clone();
            rc_ext.resize(k + 1, field.zero());
            vec_ops::axpy(field, &mut combo, &c, &rc_ext);
        }
        match v.iter().position(|x| !field.is_zero(x)) {
            None => return Poly::new(field, combo).monic(),
            Some(p) => {
                let inv = field.inv(&v[p]).unwrap();
                let v = vec_ops::scale(field, &inv, &v);
                let combo = vec_ops::scale(field, &inv, &combo);
                rows.push((p, v, combo));
            }
        }
        current = step(&current);
    }
    unreachable!("a Krylov sequence in dimension n is dependent after n+1 terms")
}

/// Minimal polynomial of a square matrix.
pub fn minimal_polynomial<F: Field>(l: &Matrix<F>) -> Poly<F> {
    assert!(l.is_square(), "minimal polynomial of a non-square matrix");
    let f = l.field();
    let n = l.rows();
    let start = Matrix::identity(f, n).into_data();
    krylov_minimal_polynomial(f, start, |v| {
        let m = Matrix::from_flat(f, n, n, v.to_vec()).unwrap();
        m.mul(l).into_data()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn divrem_reconstructs() {
        let q = Rationals;
        let a = Poly::from_i64(&q, &[1, 2, 3, 4]);
        let b = Poly::from_i64(&q, &[1, 1]);
        let (qt, r) = a.divrem(&b);
        assert_eq!(qt.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_over_gf3() {
        let f = PrimeField::new(3).unwrap();
        // (x+1)(x+2) and (x+1)x
        let a = Poly::from_i64(&f, &[2, 0, 1]);
        let b = Poly::from_i64(&f, &[0, 1, 1]);
        assert_eq!(a.gcd(&b), Poly::from_i64(&f, &[1, 1]));
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn nilpotent_and_rotation_minpolys() {
        let q = Rationals;
        let n = Matrix::from_i64(&q, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(minimal_polynomial(&n), Poly::from_i64(&q, &[0, 0, 0, 1]));
        let j = Matrix::from_i64(&q, &[&[0, -1], &[1, 0]]);
        assert_eq!(minimal_polynomial(&j), Poly::from_i64(&q, &[1, 0, 1]));
        assert_eq!(minimal_polynomial(&Matrix::identity(&q, 3)), Poly::from_i64(&q, &[-1, 1]));
        assert!(minimal_polynomial(&j).eval_matrix(&j).is_zero());
    }
}
