//! Exact base fields.
//!
//! A [`Field`] is a small context object (the rationals, or a prime field with
//! its modulus) that owns the arithmetic on its element type. Every matrix,
//! algebra and coalgebra carries a copy of its field, so all values in one
//! computation share one descriptor.

use std::fmt::{self, Debug};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u32),
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => u64::from(*p),
        }
    }

    /// Parses `"Q"` or `"GF(p)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldDescriptor::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("unknown field descriptor {s:?}")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic in {s:?}")))?;
        check_prime(p)?;
        Ok(FieldDescriptor::PrimeField(p as u32))
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        FieldDescriptor::parse(&s).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if p > (1u64 << 31) || !is_prime(p) {
        return Err(Error::InvalidField(format!(
            "characteristic {p} is not a prime <= 2^31"
        )));
    }
    Ok(())
}

/// Arithmetic of an exact field.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Decimal form used in reports: `"3/4"` or `"2 mod 5"`.
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    /// Number of elements, `None` for infinite fields.
    fn order(&self) -> Option<u64>;

    /// A pseudo-random element; over Q a small integer in `[-spread, spread]`.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, spread: i64) -> Self::Elem;

    fn characteristic(&self) -> u64 {
        self.descriptor().characteristic()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// All elements, for finite fields only.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let q = self.order()?;
        Some((0..q as i64).map(|i| self.from_i64(i)).collect())
    }
}

/// The field of rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if b.is_zero() {
            return a.clone();
        }
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_zero() || b.is_zero() {
            return BigRational::zero();
        }
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        parse_rational(s)
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, spread: i64) -> BigRational {
        self.from_i64(rng.gen_range(-spread..=spread))
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("bad rational literal {s:?}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// The prime field GF(p), elements stored as residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        check_prime(u64::from(p))?;
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn reduce(&self, n: i64) -> u32 {
        n.rem_euclid(i64::from(self.p)) as u32
    }

    /// Symmetric integer representative in `(-p/2, p/2]`.
    pub fn lift_symmetric(&self, a: u32) -> i64 {
        let a = i64::from(a);
        let p = i64::from(self.p);
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::PrimeField(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u32 {
        self.reduce(n)
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) + u64::from(*b)) % u64::from(self.p)) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) + u64::from(self.p) - u64::from(*b)) % u64::from(self.p)) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) * u64::from(*b)) % u64::from(self.p)) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let e = i64::from(*a).extended_gcd(&i64::from(self.p));
        Some(self.reduce(e.x))
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn format(&self, a: &u32) -> String {
        format!("{} mod {}", a, self.p)
    }
    fn parse(&self, s: &str) -> Result<u32> {
        let t = s.trim();
        let body = match t.split_once("mod") {
            Some((v, m)) => {
                let m: u32 = m
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
                if m != self.p {
                    return Err(Error::FieldMismatch(format!(
                        "literal {s:?} is not in GF({})",
                        self.p
                    )));
                }
                v.trim()
            }
            None => t,
        };
        let q = parse_rational(body)?;
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p);
        let den = q.denom().mod_floor(&p);
        let num = u32::try_from(num).expect("residue fits");
        let den = u32::try_from(den).expect("residue fits");
        let den_inv = self
            .inv(&den)
            .ok_or_else(|| Error::Parse(format!("denominator of {s:?} vanishes mod {}", self.p)))?;
        Ok(self.mul(&num, &den_inv))
    }
    fn order(&self) -> Option<u64> {
        Some(u64::from(self.p))
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, _spread: i64) -> u32 {
        rng.gen_range(0..self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.neg(&0), 0);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.parse("3/2").unwrap(), f.mul(&3, &f.inv(&2).unwrap()));
        assert_eq!(f.parse("2 mod 7").unwrap(), 2);
        assert!(f.parse("2 mod 5").is_err());
        assert_eq!(f.format(&2), "2 mod 7");
    }

    #[test]
    fn non_prime_rejected() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(FieldDescriptor::parse("GF(9)").is_err());
        assert_eq!(FieldDescriptor::parse("GF(3)").unwrap(), FieldDescriptor::PrimeField(3));
    }

    #[test]
    fn rational_literals() {
        let q = Rationals;
        let x = q.parse("-6/8").unwrap();
        assert_eq!(q.format(&x), "-3/4");
        assert_eq!(q.format(&q.parse("5").unwrap()), "5");
        assert!(q.parse("1/0").is_err());
    }
}
