//! Structural certification of left chain rings.

use super::{division_check, Algebra, DivisionCheck};
use crate::error::{Error, Result};
use crate::factor::Factorable;
use crate::field::Field;
use crate::matrix::vec_ops;
use crate::report::Verdict;
use crate::subspace::Subspace;
use crate::AnalysisConfig;

/// Evidence for or against the left ideals of an algebra forming a chain.
#[derive(Clone, Debug)]
pub struct ChainRingCertificate<F: Field> {
    pub is_chain: bool,
    /// `J⁰ = A ⊇ J ⊇ J² ⊇ … ⊇ 0`.
    pub radical_powers: Vec<Subspace<F>>,
    /// `t` with `J^i = A·t^i` for every `i`, when the ring is a chain ring with `J ≠ 0`.
    pub generator: Option<Vec<F::Elem>>,
    /// Division test of `A/J`.
    pub residue: DivisionCheck<F>,
    pub reason: Option<String>,
}

/// Left ideal `A·x`.
pub fn principal_left_ideal<F: Field>(a: &Algebra<F>, x: &[F::Elem]) -> Subspace<F> {
    a.right_mult(x).image()
}

/// Certifies `A` as a left chain ring: `A/J` is a division algebra, `J/J²` is at most
/// one-dimensional over it, and an explicit `t` has `J^i = A·t^i` for all `i`.
pub fn is_left_chain_ring<F: Factorable>(a: &Algebra<F>, cfg: &AnalysisConfig) -> Result<ChainRingCertificate<F>> {
    let f = a.field();
    let j = a.radical_with_fallback(cfg)?;
    let powers = a.ideal_powers(&j);
    let quotient = a.quotient(&j)?;
    let residue = division_check(&quotient, cfg)?;
    let mut cert = ChainRingCertificate {
        is_chain: false,
        radical_powers: powers.clone(),
        generator: None,
        residue,
        reason: None,
    };
    match cert.residue.verdict {
        Verdict::Unknown => {
            return Err(Error::Unknown(format!(
                "residue algebra division test: {}",
                cert.residue.note
            )))
        }
        Verdict::No => {
            cert.reason = Some("A/J is not a division algebra".into());
            return Ok(cert);
        }
        Verdict::Yes => {}
    }
    if j.is_zero() {
        cert.is_chain = true;
        return Ok(cert);
    }
    let d = quotient.dim();
    let j2 = &powers[2];
    if j.dim() - j2.dim() != d {
        cert.reason = Some(format!(
            "J/J² has dimension {} while A/J has dimension {d}",
            j.dim() - j2.dim()
        ));
        return Ok(cert);
    }
    let candidates: Vec<Vec<F::Elem>> = j.basis_vecs().into_iter().filter(|v| !j2.contains(v)).collect();
    for t in candidates {
        let mut tp = t.clone();
        let mut ok = true;
        for p in powers.iter().skip(1) {
            if principal_left_ideal(a, &tp) != *p {
                ok = false;
                break;
            }
            tp = a.product(&tp, &t);
        }
        if ok && vec_ops::is_zero(f, &tp) {
            cert.is_chain = true;
            cert.generator = Some(t);
            return Ok(cert);
        }
    }
    cert.reason = Some("no element of J \\ J² generates every radical power".into());
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_product, gaussian_conjugation, gaussian_rationals, ground_field, polynomial_quotient, skew_polynomial_quotient, trivial_extension};
    use crate::field::Rationals;
    use crate::matrix::Matrix;
    use crate::poly::Poly;

    #[test]
    fn truncated_polynomials_are_chain() {
        let q = Rationals;
        let a = polynomial_quotient(&q, &Poly::monomial(&q, q.one(), 4)).unwrap();
        let c = is_left_chain_ring(&a, &AnalysisConfig::default()).unwrap();
        assert!(c.is_chain);
        assert_eq!(c.generator.unwrap(), a.basis_vector(1));
        assert_eq!(c.radical_powers.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![4, 3, 2, 1, 0]);
    }

    #[test]
    fn skew_and_trivial_extensions_are_chain() {
        let q = Rationals;
        let c = gaussian_rationals(&q);
        let conj = gaussian_conjugation(&q);
        let cfg = AnalysisConfig::default();
        let skew = skew_polynomial_quotient(&c, &conj, 2).unwrap();
        let cert = is_left_chain_ring(&skew, &cfg).unwrap();
        assert!(cert.is_chain);
        assert_eq!(cert.generator.unwrap(), skew.basis_vector(2));
        let te = trivial_extension(&c, &conj, &Matrix::identity(&q, 2)).unwrap();
        let cert = is_left_chain_ring(&te, &cfg).unwrap();
        assert!(cert.is_chain);
        assert_eq!(cert.radical_powers.len(), 3);
    }

    #[test]
    fn product_of_fields_is_not_chain() {
        let q = Rationals;
        let a = direct_product(&[ground_field(&q), ground_field(&q)]).unwrap();
        let c = is_left_chain_ring(&a, &AnalysisConfig::default()).unwrap();
        assert!(!c.is_chain);
    }
}
