//! Named algebras and the algebra constructions built from a base algebra.

use super::{require_automorphism, require_valid, Algebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{vec_ops, Matrix};
use crate::poly::Poly;

/// The one-dimensional algebra `k`.
pub fn ground_field<F: Field>(field: &F) -> Algebra<F> {
    Algebra::from_fn(field, 1, vec![field.one()], |_, _| vec![field.one()])
}

/// `k[t]/(f)` on the basis `1, t, …, t^{d-1}`.
pub fn polynomial_quotient<F: Field>(field: &F, f: &Poly<F>) -> Result<Algebra<F>> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::InvalidAlgebra("modulus must have positive degree".into())),
    };
    let f = f.monic();
    Ok(Algebra::from_fn(field, d, vec_ops::unit(field, d, 0), |i, j| {
        let r = Poly::monomial(field, field.one(), i + j).rem(&f);
        (0..d).map(|k| r.coeff(k)).collect()
    }))
}

/// `k[t]/(t²+1)` on the basis `1, i`; a field over Q and over GF(p) with p ≡ 3 mod 4.
pub fn gaussian_rationals<F: Field>(field: &F) -> Algebra<F> {
    polynomial_quotient(field, &Poly::from_i64(field, &[1, 0, 1])).expect("degree 2 modulus")
}

/// Complex conjugation `a + b·i ↦ a − b·i`.
pub fn gaussian_conjugation<F: Field>(field: &F) -> Matrix<F> {
    Matrix::diagonal(field, &[field.one(), field.from_i64(-1)])
}

/// Quaternion algebra `(a, b)` on `1, i, j, k` with `i² = a`, `j² = b`, `ij = k = −ji`.
pub fn quaternions<F: Field>(field: &F, a: i64, b: i64) -> Algebra<F> {
    // e_x e_y = sign · scalar · e_{x xor y}
    let table = |x: usize, y: usize| -> i64 {
        match (x, y) {
            (0, _) | (_, 0) => 1,
            (1, 1) => a,
            (2, 2) => b,
            (3, 3) => -a * b,
            (1, 2) => 1,
            (2, 1) => -1,
            (1, 3) => a,
            (3, 1) => -a,
            (2, 3) => -b,
            (3, 2) => b,
            _ => unreachable!(),
        }
    };
    Algebra::from_fn(field, 4, vec_ops::unit(field, 4, 0), |x, y| {
        let mut v = vec_ops::zeros(field, 4);
        v[x ^ y] = field.from_i64(table(x, y));
        v
    })
}

/// `M_n(k)` on matrix units `E_{ab}` at index `a·n + b`.
pub fn matrix_algebra<F: Field>(field: &F, n: usize) -> Algebra<F> {
    let dim = n * n;
    let mut unit = vec_ops::zeros(field, dim);
    for a in 0..n {
        unit[a * n + a] = field.one();
    }
    Algebra::from_fn(field, dim, unit, |x, y| {
        let (a, b) = (x / n, x % n);
        let (c, d) = (y / n, y % n);
        let mut v = vec_ops::zeros(field, dim);
        if b == c {
            v[a * n + d] = field.one();
        }
        v
    })
}

/// Direct product with the factors' bases concatenated.
pub fn direct_product<F: Field>(parts: &[Algebra<F>]) -> Result<Algebra<F>> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidAlgebra("direct product of no factors".into()))?;
    let field = first.field().clone();
    if parts.iter().any(|p| p.field() != &field) {
        return Err(Error::FieldMismatch("direct product factors over different fields".into()));
    }
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.dim();
            Some(o)
        })
        .collect();
    let n: usize = parts.iter().map(|p| p.dim()).sum();
    let locate = |x: usize| -> (usize, usize) {
        let b = offsets.iter().rposition(|&o| o <= x).unwrap();
        (b, x - offsets[b])
    };
    let mut unit = Vec::with_capacity(n);
    for p in parts {
        unit.extend(p.unit().iter().cloned());
    }
    Ok(Algebra::from_fn(&field, n, unit, |x, y| {
        let (bx, ix) = locate(x);
        let (by, iy) = locate(y);
        let mut v = vec_ops::zeros(&field, n);
        if bx == by {
            for (k, c) in parts[bx].basis_product(ix, iy).into_iter().enumerate() {
                v[offsets[bx] + k] = c;
            }
        }
        v
    }))
}

/// `D[x; α]/(x^{N+1})` on the degree-major basis `e_s x^i` at index `i·dim(D) + s`, with
/// `(e_s x^i)(e_t x^j) = e_s α^i(e_t) x^{i+j}`.
pub fn skew_polynomial_quotient<F: Field>(d: &Algebra<F>, alpha: &Matrix<F>, n: usize) -> Result<Algebra<F>> {
    require_valid(d)?;
    require_automorphism(d, alpha, "alpha")?;
    let f = d.field().clone();
    let r = d.dim();
    let powers: Vec<Matrix<F>> = (0..=n as u64).map(|i| alpha.pow(i)).collect();
    let dim = r * (n + 1);
    let mut unit = vec_ops::zeros(&f, dim);
    unit[..r].clone_from_slice(d.unit());
    Ok(Algebra::from_fn(&f, dim, unit, |x, y| {
        let (i, s) = (x / r, x % r);
        let (j, t) = (y / r, y % r);
        let mut v = vec_ops::zeros(&f, dim);
        if i + j <= n {
            let twisted = powers[i].column(t);
            let prod = d.product(&d.basis_vector(s), &twisted);
            v[(i + j) * r..(i + j + 1) * r].clone_from_slice(&prod);
        }
        v
    }))
}

/// `D ⋉ V` with `V = D`: `(a,x)(b,y) = (ab, φ(a)y + xσ(b))`, basis `(e_s,0)` then `(0,e_s)`.
pub fn trivial_extension<F: Field>(d: &Algebra<F>, phi: &Matrix<F>, sigma: &Matrix<F>) -> Result<Algebra<F>> {
    require_valid(d)?;
    require_automorphism(d, phi, "phi")?;
    require_automorphism(d, sigma, "sigma")?;
    let f = d.field().clone();
    let r = d.dim();
    let dim = 2 * r;
    let mut unit = vec_ops::zeros(&f, dim);
    unit[..r].clone_from_slice(d.unit());
    Ok(Algebra::from_fn(&f, dim, unit, |x, y| {
        let mut v = vec_ops::zeros(&f, dim);
        match (x < r, y < r) {
            (true, true) => v[..r].clone_from_slice(&d.basis_product(x, y)),
            (true, false) => {
                let prod = d.product(&phi.column(x), &d.basis_vector(y - r));
                v[r..].clone_from_slice(&prod);
            }
            (false, true) => {
                let prod = d.product(&d.basis_vector(x - r), &sigma.column(y));
                v[r..].clone_from_slice(&prod);
            }
            (false, false) => {}
        }
        v
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn skew_quotient_small_cases() {
        let q = Rationals;
        let k = ground_field(&q);
        let a = skew_polynomial_quotient(&k, &Matrix::identity(&q, 1), 2).unwrap();
        assert_eq!(a, polynomial_quotient(&q, &Poly::from_i64(&q, &[0, 0, 0, 1])).unwrap());

        let c = gaussian_rationals(&q);
        let commutative = skew_polynomial_quotient(&c, &Matrix::identity(&q, 2), 1).unwrap();
        assert_eq!(commutative.dim(), 4);
        assert!(commutative.is_commutative());

        let twisted = skew_polynomial_quotient(&c, &gaussian_conjugation(&q), 1).unwrap();
        assert!(twisted.verify().is_valid());
        // basis: 1, i, x, ix ; x·i = −i·x
        let x = twisted.basis_vector(2);
        let i = twisted.basis_vector(1);
        let xi = twisted.product(&x, &i);
        let ix = twisted.product(&i, &x);
        assert_eq!(xi, vec_ops::scale(&q, &q.from_i64(-1), &ix));
    }

    #[test]
    fn trivial_extension_commutativity_rule() {
        let q = Rationals;
        let k = ground_field(&q);
        let id1 = Matrix::identity(&q, 1);
        let dual_numbers = polynomial_quotient(&q, &Poly::from_i64(&q, &[0, 0, 1])).unwrap();
        assert_eq!(trivial_extension(&k, &id1, &id1).unwrap(), dual_numbers);

        let c = gaussian_rationals(&q);
        let id = Matrix::identity(&q, 2);
        let conj = gaussian_conjugation(&q);
        for (phi, sigma) in [(&id, &id), (&id, &conj), (&conj, &id), (&conj, &conj)] {
            let a = trivial_extension(&c, phi, sigma).unwrap();
            assert!(a.verify().is_valid());
            assert_eq!(a.is_commutative(), phi == sigma);
        }
    }

    #[test]
    fn direct_product_rejects_mixed_fields() {
        let f2 = crate::field::PrimeField::new(2).unwrap();
        let f3 = crate::field::PrimeField::new(3).unwrap();
        let same = vec![ground_field(&f2), ground_field(&f2)];
        assert!(direct_product(&same).unwrap().verify().is_valid());
        let mixed = vec![ground_field(&f2), ground_field(&f3)];
        assert!(matches!(direct_product(&mixed), Err(Error::FieldMismatch(_))));
    }
}
