//! Deciding whether an algebra is a division algebra.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Algebra;
use crate::error::{Error, Result};
use crate::factor::Factorable;
use crate::field::Field;
use crate::matrix::vec_ops;
use crate::poly::Poly;
use crate::report::{Certainty, Verdict};
use crate::AnalysisConfig;

const RANDOM_PROBES: usize = 32;

/// Result of a division-algebra test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionCheck<F: Field> {
    pub verdict: Verdict,
    /// Set for `Yes`: exact when a field generator or exhaustive scan was found.
    pub certainty: Option<Certainty>,
    /// An element whose minimal polynomial is irreducible of full degree.
    pub primitive_element: Option<Vec<F::Elem>>,
    /// Nonzero `x, y` with `x·y = 0`, for `No`.
    pub zero_divisors: Option<(Vec<F::Elem>, Vec<F::Elem>)>,
    pub note: String,
}

impl<F: Field> DivisionCheck<F> {
    fn yes(certainty: Certainty, primitive: Option<Vec<F::Elem>>, note: &str) -> Self {
        DivisionCheck {
            verdict: Verdict::Yes,
            certainty: Some(certainty),
            primitive_element: primitive,
            zero_divisors: None,
            note: note.into(),
        }
    }

    fn no(x: Vec<F::Elem>, y: Vec<F::Elem>, note: &str) -> Self {
        DivisionCheck {
            verdict: Verdict::No,
            certainty: None,
            primitive_element: None,
            zero_divisors: Some((x, y)),
            note: note.into(),
        }
    }

    fn unknown(note: &str) -> Self {
        DivisionCheck {
            verdict: Verdict::Unknown,
            certainty: None,
            primitive_element: None,
            zero_divisors: None,
            note: note.into(),
        }
    }
}

pub(crate) fn probes<F: Field>(a: &Algebra<F>, seed: u64) -> Vec<Vec<F::Elem>> {
    let f = a.field();
    let n = a.dim();
    let mut out: Vec<Vec<F::Elem>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 8);
    for _ in 0..RANDOM_PROBES {
        out.push((0..n).map(|_| f.sample(&mut rng, 3)).collect());
    }
    out
}

/// Outcome of inspecting the minimal polynomial of one element.
pub(crate) enum Probe<F: Field> {
    /// Irreducible of degree equal to the algebra dimension.
    Generator,
    /// Irreducible of smaller degree.
    Irreducible,
    /// `m = g·h` with both factors proper, so `g(a)·h(a) = 0` with both nonzero.
    Split(Vec<F::Elem>, Vec<F::Elem>),
    /// Factorization refused at the degree cap.
    Capped,
}

pub(crate) fn probe_element<F: Factorable>(a: &Algebra<F>, x: &[F::Elem], cfg: &AnalysisConfig) -> Result<Probe<F>> {
    let f = a.field();
    let m = a.element_minimal_polynomial(x);
    let factors = match f.factor(&m, cfg.degree_cap) {
        Ok(fs) => fs,
        Err(Error::DegreeCapExceeded { .. }) => return Ok(Probe::Capped),
        Err(e) => return Err(e),
    };
    if factors.len() == 1 && factors[0].1 == 1 {
        return Ok(if m.degree() == Some(a.dim()) {
            Probe::Generator
        } else {
            Probe::Irreducible
        });
    }
    let pow = |g: &Poly<F>, e: usize| (0..e).fold(Poly::one(f), |acc, _| acc.mul(g));
    let (g0, e) = &factors[0];
    let (g, h) = if factors.len() >= 2 {
        let g = pow(g0, *e);
        let h = m.divrem(&g).0;
        (g, h)
    } else {
        (pow(g0, e - 1), g0.clone())
    };
    Ok(Probe::Split(a.eval_poly(&g, x), a.eval_poly(&h, x)))
}

fn exhaustive<F: Field>(a: &Algebra<F>, cfg: &AnalysisConfig) -> Option<DivisionCheck<F>> {
    let f = a.field();
    let q = f.order()?;
    let n = a.dim() as u32;
    let total = u128::from(q).checked_pow(n)?;
    if total > u128::from(cfg.budget) {
        return None;
    }
    let elems = f.elements()?;
    for idx in 1..total {
        let mut rest = idx;
        let x: Vec<F::Elem> = (0..n)
            .map(|_| {
                let d = (rest % u128::from(q)) as usize;
                rest /= u128::from(q);
                elems[d].clone()
            })
            .collect();
        let ker = a.left_mult(&x).kernel();
        if !ker.is_zero() {
            return Some(DivisionCheck::no(x, ker.basis_vecs()[0].clone(), "exhaustive scan found a zero divisor"));
        }
    }
    Some(DivisionCheck::yes(Certainty::Exact, None, "every nonzero element is invertible"))
}

/// Decides whether `a` is a division algebra.
///
/// A commutative algebra is certified by an element whose minimal polynomial is
/// irreducible of full degree. A noncommutative algebra over Q whose center is a
/// field and whose probed elements all have irreducible minimal polynomials is
/// accepted lazily; over a finite field it is rejected once a zero divisor is found.
pub fn division_check<F: Factorable>(a: &Algebra<F>, cfg: &AnalysisConfig) -> Result<DivisionCheck<F>> {
    let f = a.field();
    if a.dim() == 0 {
        let mut zero = DivisionCheck::unknown("the zero ring is not a division algebra");
        zero.verdict = Verdict::No;
        return Ok(zero);
    }
    if a.dim() == 1 {
        return Ok(DivisionCheck::yes(Certainty::Exact, Some(a.unit().to_vec()), "one-dimensional"));
    }
    let radical = a.radical_with_fallback(cfg)?;
    if let Some(r) = radical.basis_vecs().into_iter().next() {
        // r nilpotent: r · r^{k-1} = 0 with r^{k-1} ≠ 0
        let mut prev = r.clone();
        loop {
            let next = a.product(&r, &prev);
            if vec_ops::is_zero(f, &next) {
                return Ok(DivisionCheck::no(r, prev, "nonzero radical"));
            }
            prev = next;
        }
    }
    if a.is_commutative() {
        return commutative_check(a, cfg);
    }
    let center = a.center();
    let z = a.subalgebra(&center)?;
    let zc = commutative_check(&z, cfg)?;
    let lift = |v: &[F::Elem]| center.basis().apply_left(v);
    match zc.verdict {
        Verdict::No => {
            let (x, y) = zc.zero_divisors.unwrap();
            return Ok(DivisionCheck::no(lift(&x), lift(&y), "center is not a field"));
        }
        Verdict::Unknown => return Ok(DivisionCheck::unknown("center could not be certified as a field")),
        Verdict::Yes => {}
    }
    let mut capped = false;
    for x in probes(a, 0x6469_7673) {
        match probe_element(a, &x, cfg)? {
            Probe::Split(g, h) => return Ok(DivisionCheck::no(g, h, "reducible minimal polynomial")),
            Probe::Capped => capped = true,
            _ => {}
        }
    }
    if f.order().is_some() {
        if let Some(res) = exhaustive(a, cfg) {
            return Ok(res);
        }
        return Ok(DivisionCheck::unknown(
            "noncommutative over a finite field but no zero divisor found within the probes",
        ));
    }
    if capped {
        return Ok(DivisionCheck::unknown("degree cap reached while probing"));
    }
    Ok(DivisionCheck::yes(
        Certainty::Lazy,
        None,
        "center is a field and every probed element has an irreducible minimal polynomial",
    ))
}

fn commutative_check<F: Factorable>(a: &Algebra<F>, cfg: &AnalysisConfig) -> Result<DivisionCheck<F>> {
    if a.dim() == 1 {
        return Ok(DivisionCheck::yes(Certainty::Exact, Some(a.unit().to_vec()), "one-dimensional"));
    }
    let mut capped = false;
    for x in probes(a, 0x6669_656c) {
        match probe_element(a, &x, cfg)? {
            Probe::Generator => {
                return Ok(DivisionCheck::yes(
                    Certainty::Exact,
                    Some(x),
                    "generated by an element with irreducible minimal polynomial",
                ))
            }
            Probe::Split(g, h) => return Ok(DivisionCheck::no(g, h, "reducible minimal polynomial")),
            Probe::Capped => capped = true,
            Probe::Irreducible => {}
        }
    }
    if let Some(res) = exhaustive(a, cfg) {
        return Ok(res);
    }
    Ok(DivisionCheck::unknown(if capped {
        "degree cap reached while searching for a field generator"
    } else {
        "no field generator among the probes"
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_product, gaussian_rationals, ground_field, matrix_algebra, quaternions};
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn gaussian_field_is_certified_exactly() {
        let q = Rationals;
        let c = division_check(&gaussian_rationals(&q), &AnalysisConfig::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Yes);
        assert_eq!(c.certainty, Some(Certainty::Exact));
    }

    #[test]
    fn split_cases_have_zero_divisors() {
        let q = Rationals;
        let cfg = AnalysisConfig::default();
        let kk = direct_product(&[ground_field(&q), ground_field(&q)]).unwrap();
        let c = division_check(&kk, &cfg).unwrap();
        assert_eq!(c.verdict, Verdict::No);
        let (x, y) = c.zero_divisors.unwrap();
        assert!(vec_ops::is_zero(&q, &kk.product(&x, &y)));

        let m2 = matrix_algebra(&q, 2);
        let c = division_check(&m2, &cfg).unwrap();
        assert_eq!(c.verdict, Verdict::No);
        let (x, y) = c.zero_divisors.unwrap();
        assert!(vec_ops::is_zero(&q, &m2.product(&x, &y)));
        assert!(!vec_ops::is_zero(&q, &x) && !vec_ops::is_zero(&q, &y));
    }

    #[test]
    fn hamilton_quaternions_lazy_yes_and_gf3_gaussian() {
        let q = Rationals;
        let cfg = AnalysisConfig::default();
        let h = division_check(&quaternions(&q, -1, -1), &cfg).unwrap();
        assert_eq!(h.verdict, Verdict::Yes);
        assert_eq!(h.certainty, Some(Certainty::Lazy));
        let split = division_check(&quaternions(&q, 1, 1), &cfg).unwrap();
        assert_eq!(split.verdict, Verdict::No);

        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(division_check(&gaussian_rationals(&f3), &cfg).unwrap().verdict, Verdict::Yes);
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(division_check(&gaussian_rationals(&f5), &cfg).unwrap().verdict, Verdict::No);
    }
}
