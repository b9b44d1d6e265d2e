//! Factorization of univariate polynomials over GF(p) and over Q.
//!
//! Over GF(p) a square-free decomposition is followed by Berlekamp splitting.
//! Over Q each square-free part is made primitive over Z, factored modulo a
//! good prime, Hensel-lifted past a coefficient bound and recombined.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Factors with multiplicities. Factors are monic and sorted by degree, then coefficients.
pub type Factorization<F> = Vec<(Poly<F>, usize)>;

/// Fields whose polynomials can be factored.
pub trait Factorable: Field {
    /// Monic irreducible factors of a nonzero polynomial with multiplicities.
    fn factor(&self, p: &Poly<Self>, degree_cap: usize) -> Result<Factorization<Self>>;

    fn is_irreducible(&self, p: &Poly<Self>, degree_cap: usize) -> Result<bool> {
        if p.degree().unwrap_or(0) == 0 {
            return Ok(false);
        }
        let fs = self.factor(p, degree_cap)?;
        Ok(fs.len() == 1 && fs[0].1 == 1)
    }
}

impl Factorable for PrimeField {
    fn factor(&self, p: &Poly<Self>, _degree_cap: usize) -> Result<Factorization<Self>> {
        Ok(factor_mod_p(p))
    }
}

impl Factorable for Rationals {
    fn factor(&self, p: &Poly<Self>, degree_cap: usize) -> Result<Factorization<Self>> {
        factor_rational(p, degree_cap)
    }
}

fn sort_factors<F: Field>(mut fs: Factorization<F>) -> Factorization<F> {
    fs.sort_by(|(a, ma), (b, mb)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
            .then(ma.cmp(mb))
    });
    fs
}

// ---------------------------------------------------------------- GF(p)

/// Complete factorization over GF(p).
pub fn factor_mod_p(f: &Poly<PrimeField>) -> Factorization<PrimeField> {
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let mut out = Vec::new();
    for (part, mult) in squarefree_mod_p(&f.monic()) {
        for g in berlekamp(&part) {
            out.push((g, mult));
        }
    }
    sort_factors(out)
}

fn pth_root(f: &Poly<PrimeField>) -> Poly<PrimeField> {
    let field = f.field();
    let p = field.modulus() as usize;
    let coeffs = f.coeffs().iter().step_by(p).cloned().collect();
    Poly::new(field, coeffs)
}

/// Square-free parts with multiplicities of a monic polynomial over GF(p).
fn squarefree_mod_p(f: &Poly<PrimeField>) -> Vec<(Poly<PrimeField>, usize)> {
    let field = f.field();
    let p = field.modulus() as usize;
    let one = Poly::one(field);
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        for (g, m) in squarefree_mod_p(&pth_root(f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&d);
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while w != one {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if !z.is_constant() {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.divrem(&w).0;
    }
    if !c.is_constant() {
        for (g, m) in squarefree_mod_p(&pth_root(&c.monic())) {
            out.push((g, m * p));
        }
    }
    out
}

/// Irreducible factors of a square-free monic polynomial.
fn berlekamp(f: &Poly<PrimeField>) -> Vec<Poly<PrimeField>> {
    let field = f.field();
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return vec![f.monic()];
    }
    let p = field.modulus();
    // rows of Q: x^{ip} mod f
    let xp = Poly::x(field).pow_mod(u128::from(p), f);
    let mut q = Matrix::zeros(field, n, n);
    let mut cur = Poly::one(field);
    for i in 0..n {
        for j in 0..n {
            q.set(i, j, cur.coeff(j));
        }
        cur = cur.mul(&xp).rem(f);
    }
    let fixed = q.sub(&Matrix::identity(field, n)).transpose().kernel();
    let k = fixed.dim();
    if k == 1 {
        return vec![f.monic()];
    }
    let basis: Vec<Poly<PrimeField>> = fixed
        .basis_vecs()
        .into_iter()
        .map(|v| Poly::new(field, v))
        .filter(|v| !v.is_constant())
        .collect();
    let mut factors = vec![f.monic()];
    if p <= 1024 {
        for v in &basis {
            if factors.len() == k {
                break;
            }
            let mut next = Vec::new();
            for h in factors {
                let mut h = h;
                if h.degree() == Some(1) {
                    next.push(h);
                    continue;
                }
                for s in 0..p {
                    if h.degree() == Some(1) {
                        break;
                    }
                    let g = h.gcd(&v.sub(&Poly::constant(field, s)));
                    if !g.is_constant() && g.degree() != h.degree() {
                        h = h.divrem(&g).0.monic();
                        next.push(g);
                    }
                }
                next.push(h);
            }
            factors = next;
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(u64::from(p) ^ n as u64);
        let e = u128::from((p - 1) / 2);
        while factors.len() < k {
            let mut w = Poly::zero(field);
            for v in &basis {
                w = w.add(&v.scale(&rng.gen_range(0..p)));
            }
            let mut next = Vec::new();
            for h in factors {
                if h.degree() == Some(1) {
                    next.push(h);
                    continue;
                }
                let a = w.pow_mod(e, &h).sub(&Poly::one(field));
                let g = h.gcd(&a);
                if !g.is_constant() && g.degree() != h.degree() {
                    next.push(h.divrem(&g).0.monic());
                    next.push(g);
                } else {
                    next.push(h);
                }
            }
            factors = next;
        }
    }
    factors
}

// ---------------------------------------------------------------- Q

/// Complete factorization over Q. Square-free parts of degree above `degree_cap`
/// that are not already split by the square-free decomposition are refused.
pub fn factor_rational(f: &Poly<Rationals>, degree_cap: usize) -> Result<Factorization<Rationals>> {
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let mut out = Vec::new();
    for (part, mult) in squarefree_rational(&f.monic()) {
        let mut part = part;
        // peel off x, which is common in nilpotent minimal polynomials
        if part.coeff(0).is_zero() {
            out.push((Poly::x(&Rationals), mult));
            part = part.divrem(&Poly::x(&Rationals)).0;
        }
        let d = part.degree().unwrap_or(0);
        if d == 0 {
            continue;
        }
        if d > degree_cap {
            return Err(Error::DegreeCapExceeded { degree: d, cap: degree_cap });
        }
        for g in zassenhaus(&part) {
            out.push((g, mult));
        }
    }
    Ok(sort_factors(out))
}

fn squarefree_rational(f: &Poly<Rationals>) -> Vec<(Poly<Rationals>, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let one = Poly::one(&Rationals);
    let mut c = f.gcd(&f.derivative());
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while w != one {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if !z.is_constant() {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.divrem(&w).0;
    }
    out
}

type IntPoly = Vec<BigInt>;

fn trim(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Primitive integer polynomial with positive leading coefficient, proportional to `f`.
fn primitive_integer(f: &Poly<Rationals>) -> IntPoly {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntPoly = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: IntPoly = ints.into_iter().map(|c| c / &g).collect();
    if out.last().is_some_and(|c| c.is_negative()) {
        out = out.into_iter().map(|c| -c).collect();
    }
    trim(out)
}

fn to_mod_p(field: &PrimeField, f: &[BigInt]) -> Poly<PrimeField> {
    let p = BigInt::from(field.modulus());
    Poly::new(
        field,
        f.iter().map(|c| c.mod_floor(&p).to_u32().unwrap()).collect(),
    )
}

fn from_mod_p(f: &Poly<PrimeField>) -> IntPoly {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|k| a.get(k).unwrap_or(&z) - b.get(k).unwrap_or(&z)).collect())
}

fn int_add_scaled(a: &[BigInt], b: &[BigInt], s: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|k| a.get(k).unwrap_or(&z) + b.get(k).unwrap_or(&z) * s).collect())
}

fn reduce_mod(a: &[BigInt], m: &BigInt) -> IntPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(a: &[BigInt], m: &BigInt) -> IntPoly {
    let half: BigInt = m / 2;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "inverse of a non-unit");
    e.x.mod_floor(m)
}

/// Lifts `f ≡ u·w (mod p)` with `w` monic to a factorization modulo `p^k`.
fn hensel_pair(
    field: &PrimeField,
    f: &[BigInt],
    u: IntPoly,
    w: IntPoly,
    k: u32,
) -> (IntPoly, IntPoly) {
    let p = BigInt::from(field.modulus());
    let (g, s, t) = to_mod_p(field, &u).ext_gcd(&to_mod_p(field, &w));
    assert!(g.degree() == Some(0), "Hensel lifting needs coprime factors");
    let (mut u, mut w) = (u, w);
    let mut pj = p.clone();
    for _ in 1..k {
        let err = int_sub(f, &int_mul(&u, &w));
        let e: IntPoly = err.iter().map(|c| c / &pj).collect();
        let e_p = to_mod_p(field, &e);
        let (quo, sigma) = s.mul(&e_p).divrem(&to_mod_p(field, &w));
        let tau = t.mul(&e_p).add(&quo.mul(&to_mod_p(field, &u)));
        u = int_add_scaled(&u, &from_mod_p(&tau), &pj);
        w = int_add_scaled(&w, &from_mod_p(&sigma), &pj);
        pj *= &p;
        u = reduce_mod(&u, &pj);
        w = reduce_mod(&w, &pj);
    }
    (u, w)
}

/// Lifts the monic modular factors of `f` (leading coefficient `lc`) to monic factors mod `p^k`.
fn hensel_tree(field: &PrimeField, f: &[BigInt], factors: &[Poly<PrimeField>], k: u32, pk: &BigInt) -> Vec<IntPoly> {
    let lc = f.last().unwrap().clone();
    if factors.len() == 1 {
        let inv = mod_inverse(&lc, pk);
        let monic: IntPoly = f.iter().map(|c| c * &inv).collect();
        return vec![reduce_mod(&monic, pk)];
    }
    let mid = factors.len() / 2;
    let prod = |fs: &[Poly<PrimeField>]| fs.iter().fold(Poly::one(field), |a, b| a.mul(b));
    let lc_p = to_mod_p(field, &[lc]).coeff(0);
    let u0 = from_mod_p(&prod(&factors[..mid]).scale(&lc_p));
    let w0 = from_mod_p(&prod(&factors[mid..]));
    let (u, w) = hensel_pair(field, f, u0, w0, k);
    let mut out = hensel_tree(field, &u, &factors[..mid], k, pk);
    out.extend(hensel_tree(field, &w, &factors[mid..], k, pk));
    out
}

fn small_primes() -> impl Iterator<Item = u32> {
    (3u32..).filter(|&n| crate::field::is_prime(u64::from(n)))
}

fn int_to_rational_poly(f: &[BigInt]) -> Poly<Rationals> {
    Poly::new(
        &Rationals,
        f.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
    )
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible monic factors of a square-free rational polynomial.
fn zassenhaus(f: &Poly<Rationals>) -> Vec<Poly<Rationals>> {
    if f.degree() == Some(1) {
        return vec![f.monic()];
    }
    let g = primitive_integer(f);
    let lc = g.last().unwrap().clone();
    let field = small_primes()
        .map(|p| PrimeField::new(p).unwrap())
        .find(|fp| {
            let pm = BigInt::from(fp.modulus());
            if lc.mod_floor(&pm).is_zero() {
                return false;
            }
            let gp = to_mod_p(fp, &g);
            gp.gcd(&gp.derivative()).degree() == Some(0)
        })
        .expect("some prime keeps a square-free polynomial square-free");
    let modular: Vec<Poly<PrimeField>> = factor_mod_p(&to_mod_p(&field, &g))
        .into_iter()
        .map(|(h, _)| h)
        .collect();
    if modular.len() == 1 {
        return vec![f.monic()];
    }
    // coefficient bound for factors of lc·g
    let d = g.len() - 1;
    let norm1: BigInt = g.iter().map(|c| c.abs()).sum();
    let bound: BigInt = lc.abs() * (BigInt::one() << d) * norm1 * 2;
    let p = BigInt::from(field.modulus());
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= bound {
        pk *= &p;
        k += 1;
    }
    let mut lifted = hensel_tree(&field, &g, &modular, k, &pk);
    let mut remaining = g.clone();
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut progressed = false;
        for subset in combinations(lifted.len(), s) {
            let lc_r = remaining.last().unwrap().clone();
            let mut cand = vec![lc_r.clone()];
            for &i in &subset {
                cand = reduce_mod(&int_mul(&cand, &lifted[i]), &pk);
            }
            let cand = symmetric(&cand, &pk);
            let cand_q = int_to_rational_poly(&cand);
            let rem_q = int_to_rational_poly(&remaining);
            let (quo, r) = rem_q.divrem(&cand_q);
            if r.is_zero() {
                found.push(cand_q.monic());
                remaining = primitive_integer(&quo);
                let keep: Vec<IntPoly> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, h)| h.clone())
                    .collect();
                lifted = keep;
                progressed = true;
                break;
            }
        }
        if !progressed {
            s += 1;
        }
    }
    if remaining.len() > 1 {
        found.push(int_to_rational_poly(&remaining).monic());
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product<F: Field>(field: &F, fs: &Factorization<F>) -> Poly<F> {
        fs.iter().fold(Poly::one(field), |acc, (g, m)| {
            (0..*m).fold(acc, |a, _| a.mul(g))
        })
    }

    #[test]
    fn x2_plus_1_by_characteristic() {
        let q = Rationals;
        let f = Poly::from_i64(&q, &[1, 0, 1]);
        assert!(q.is_irreducible(&f, 12).unwrap());
        let f3 = PrimeField::new(3).unwrap();
        assert!(f3.is_irreducible(&Poly::from_i64(&f3, &[1, 0, 1]), 12).unwrap());
        let f5 = PrimeField::new(5).unwrap();
        let fs = f5.factor(&Poly::from_i64(&f5, &[1, 0, 1]), 12).unwrap();
        assert_eq!(
            fs,
            vec![(Poly::from_i64(&f5, &[2, 1]), 1), (Poly::from_i64(&f5, &[3, 1]), 1)]
        );
    }

    #[test]
    fn repeated_factors_mod_2() {
        let f2 = PrimeField::new(2).unwrap();
        // (x+1)^2 x^3 (x^2+x+1)
        let base = Poly::from_i64(&f2, &[1, 1]);
        let f = base
            .mul(&base)
            .mul(&Poly::monomial(&f2, 1, 3))
            .mul(&Poly::from_i64(&f2, &[1, 1, 1]));
        let fs = factor_mod_p(&f);
        assert_eq!(product(&f2, &fs), f);
        assert_eq!(fs.len(), 3);
        assert!(fs.contains(&(Poly::from_i64(&f2, &[0, 1]), 3)));
    }

    #[test]
    fn swinnerton_dyer_like_quartic_is_irreducible() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime
        let q = Rationals;
        let f = Poly::from_i64(&q, &[1, 0, -10, 0, 1]);
        assert!(q.is_irreducible(&f, 12).unwrap());
    }

    #[test]
    fn rational_product_reconstructs() {
        let q = Rationals;
        let a = Poly::from_i64(&q, &[-2, 0, 1]);
        let b = Poly::from_i64(&q, &[1, 3]);
        let c = Poly::from_i64(&q, &[1, 1, 1]);
        let f = a.mul(&b).mul(&b).mul(&c).scale(&q.from_i64(7));
        let fs = q.factor(&f, 12).unwrap();
        assert_eq!(product(&q, &fs), f.monic());
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn degree_cap_is_enforced() {
        let q = Rationals;
        let f = Poly::from_i64(&q, &[2, 0, 0, 0, 1]);
        assert!(matches!(
            q.factor(&f, 3),
            Err(Error::DegreeCapExceeded { degree: 4, cap: 3 })
        ));
    }

    #[test]
    fn large_prime_random_split() {
        let fp = PrimeField::new(2_147_483_647).unwrap();
        let f = Poly::from_i64(&fp, &[-1, 0, 1]).mul(&Poly::from_i64(&fp, &[5, 1]));
        let fs = factor_mod_p(&f);
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fp, &fs), f);
    }
}
