//! Twisting automorphisms from invertible bimodules, and products of chain rings.

use super::{enumerate_left_ideals, lattice_properties};
use crate::algebra::{
    bimodule_from_automorphism, direct_product, is_left_chain_ring, verify_automorphism, verify_bimodule_isomorphism,
    Algebra, Bimodule,
};
use crate::error::{Error, Result};
use crate::factor::Factorable;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::ActionModule;
use crate::report::AxiomReport;
use crate::AnalysisConfig;

/// Coefficients tried when searching the intertwiner space for an invertible chart.
const CHART_COEFFS: [i64; 5] = [1, 2, -1, 3, -2];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismFromBimodule<F: Field> {
    /// `α(a) = f(f⁻¹(1) ◁ a)`, column `k` the image of `e_k`.
    pub alpha: Matrix<F>,
    /// The left-module isomorphism `f: M → D` used.
    pub chart: Matrix<F>,
    /// Automorphism laws of `α`.
    pub automorphism: AxiomReport,
    /// `f` as a bimodule map `M → D_α`.
    pub isomorphism: AxiomReport,
}

impl<F: Field> AutomorphismFromBimodule<F> {
    pub fn is_verified(&self) -> bool {
        self.automorphism.is_valid() && self.isomorphism.is_valid()
    }
}

/// An invertible left-module map `M → D`, searched in a fixed order.
fn find_chart<F: Field>(m: &Bimodule<F>) -> Result<Matrix<F>> {
    let d = m.algebra();
    let f = d.field();
    let left = ActionModule::new(f, m.dim(), m.left_matrices().to_vec())?;
    let homs = left.hom_basis(&ActionModule::left_regular(d))?;
    if let Some(h) = homs.iter().find(|h| h.is_invertible()) {
        return Ok(h.clone());
    }
    // small combinations Σ c_i H_i, enumerated in mixed radix
    let r = homs.len() as u32;
    let total = (CHART_COEFFS.len() as u64 + 1).saturating_pow(r).min(1 << 16);
    for mut idx in 1..total {
        let mut acc = Matrix::zeros(f, d.dim(), m.dim());
        for h in &homs {
            let digit = (idx % (CHART_COEFFS.len() as u64 + 1)) as usize;
            idx /= CHART_COEFFS.len() as u64 + 1;
            if digit > 0 {
                acc = acc.add(&h.scale(&f.from_i64(CHART_COEFFS[digit - 1])));
            }
        }
        if acc.is_invertible() {
            return Ok(acc);
        }
    }
    Err(Error::InvalidBimodule("M is not free of rank one as a left module".into()))
}

/// Recovers `α` with `M ≅ D_α` from a bimodule that is free of rank one on the left.
///
/// When `chart` is absent, an invertible solution of the intertwiner system
/// `f(a ▷ x) = a·f(x)` is searched for.
pub fn bimodule_to_automorphism<F: Field>(
    m: &Bimodule<F>,
    chart: Option<&Matrix<F>>,
) -> Result<AutomorphismFromBimodule<F>> {
    let d = m.algebra();
    let f = d.field();
    let chart = match chart {
        Some(c) => c.clone(),
        None => find_chart(m)?,
    };
    let inverse = chart
        .inverse()
        .ok_or_else(|| Error::InvalidBimodule("chart is not invertible".into()))?;
    let left = ActionModule::new(f, m.dim(), m.left_matrices().to_vec())?;
    if !left.is_hom(&ActionModule::left_regular(d), &chart) {
        return Err(Error::InvalidBimodule("chart is not a left-module map".into()));
    }
    let generator = inverse.apply(d.unit());
    let columns = m
        .right_matrices()
        .iter()
        .map(|r| chart.apply(&r.apply(&generator)))
        .collect();
    let alpha = Matrix::from_columns(f, d.dim(), columns)?;
    let automorphism = verify_automorphism(d, &alpha);
    let isomorphism = if automorphism.is_valid() {
        verify_bimodule_isomorphism(m, &bimodule_from_automorphism(d, &alpha)?, &chart)
    } else {
        let mut r = AxiomReport::default();
        r.push("alpha is an automorphism", vec![]);
        r
    };
    Ok(AutomorphismFromBimodule {
        alpha,
        chart,
        automorphism,
        isomorphism,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductChainReport {
    pub product_dim: usize,
    pub ideal_count: usize,
    pub is_distributive: bool,
    pub is_chain: bool,
    pub failing_triple: Option<(usize, usize, usize)>,
}

/// Forms the product of left chain rings and scans its left ideal lattice.
pub fn product_chain_ring_check<F: Factorable>(parts: &[Algebra<F>], cfg: &AnalysisConfig) -> Result<ProductChainReport> {
    let product = direct_product(parts)?;
    for (i, p) in parts.iter().enumerate() {
        let cert = is_left_chain_ring(p, cfg)?;
        if !cert.is_chain {
            return Err(Error::NotChain(format!(
                "factor {i}: {}",
                cert.reason.unwrap_or_else(|| "not a left chain ring".into())
            )));
        }
    }
    let ideals = enumerate_left_ideals(&product, cfg)?;
    let props = lattice_properties(&ideals)?;
    Ok(ProductChainReport {
        product_dim: product.dim(),
        ideal_count: ideals.len(),
        is_distributive: props.is_distributive,
        is_chain: props.is_chain,
        failing_triple: props.failing_triple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gaussian_conjugation, gaussian_rationals, ground_field, polynomial_quotient};
    use crate::field::{PrimeField, Rationals};
    use crate::poly::Poly;

    #[test]
    fn identity_chart_recovers_the_twist() {
        let q = Rationals;
        let d = gaussian_rationals(&q);
        let conj = gaussian_conjugation(&q);
        let m = bimodule_from_automorphism(&d, &conj).unwrap();
        let r = bimodule_to_automorphism(&m, Some(&Matrix::identity(&q, 2))).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.alpha, conj);
        let r = bimodule_to_automorphism(&m, None).unwrap();
        assert!(r.is_verified());
    }

    #[test]
    fn non_free_bimodule_is_rejected() {
        let q = Rationals;
        let d = direct_product(&[ground_field(&q), ground_field(&q)]).unwrap();
        let proj = vec![Matrix::identity(&q, 1), Matrix::zeros(&q, 1, 1)];
        let m = Bimodule::new(d, 1, proj.clone(), proj).unwrap();
        assert!(m.verify().is_valid());
        assert!(matches!(bimodule_to_automorphism(&m, None), Err(Error::InvalidBimodule(_))));
    }

    #[test]
    fn product_of_chain_rings() {
        let f2 = PrimeField::new(2).unwrap();
        let cfg = AnalysisConfig::default();
        let a = polynomial_quotient(&f2, &Poly::monomial(&f2, f2.one(), 2)).unwrap();
        let r = product_chain_ring_check(&[a.clone(), ground_field(&f2)], &cfg).unwrap();
        assert_eq!(r.ideal_count, 6);
        assert!(r.is_distributive && !r.is_chain);
        let single = product_chain_ring_check(&[a.clone()], &cfg).unwrap();
        assert!(single.is_chain);
        let f3 = PrimeField::new(3).unwrap();
        let b = ground_field(&f3);
        assert!(product_chain_ring_check(&[a, b], &cfg).is_err());
    }
}
