//! The coradical filtration, computed from radical powers and from iterated wedges.

use super::Coalgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::subspace::Subspace;
use crate::AnalysisConfig;

/// A strictly increasing chain of subspaces ending at the full space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration<F: Field> {
    pub terms: Vec<Subspace<F>>,
}

impl<F: Field> Filtration<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest `n` with `v ∈ C_n`.
    pub fn level_of(&self, v: &[F::Elem]) -> Option<usize> {
        self.terms.iter().position(|t| t.contains(v))
    }
}

/// `C_n = {c : J^{n+1} ⇀ c = 0}` for the radical `J` of the dual algebra.
pub fn filtration_by_annihilators<F: Field>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<Filtration<F>> {
    let a = c.convolution_dual();
    let j = a.radical_with_fallback(cfg)?;
    let m = c.regular_comodule();
    let terms = m.loewy_with(&a.ideal_powers(&j));
    if terms.last().map_or(c.dim() > 0, |t| !t.is_full()) {
        return Err(Error::InvalidCoalgebra("radical powers do not reach zero".into()));
    }
    Ok(Filtration { terms })
}

/// `C_0` from the radical, then `C_n = C_{n-1} ∧ C_0`.
pub fn filtration_by_wedges<F: Field>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<Filtration<F>> {
    let a = c.convolution_dual();
    let j = a.radical_with_fallback(cfg)?;
    let c0 = c.regular_comodule().annihilated_by(&j);
    let mut terms = vec![c0.clone()];
    while !terms.last().unwrap().is_full() {
        let next = c.wedge(terms.last().unwrap(), &c0)?;
        if next == *terms.last().unwrap() {
            return Err(Error::InvalidCoalgebra("wedge powers of the coradical stabilize early".into()));
        }
        terms.push(next);
    }
    Ok(Filtration { terms })
}

/// Coradical filtration computed both ways; any difference is an internal error.
pub fn coradical_filtration<F: Field>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<Filtration<F>> {
    let by_ann = filtration_by_annihilators(c, cfg)?;
    let by_wedge = filtration_by_wedges(c, cfg)?;
    if by_ann != by_wedge {
        return Err(Error::MethodDisagreement(format!(
            "annihilator dims {:?}, wedge dims {:?}",
            by_ann.dims(),
            by_wedge.dims()
        )));
    }
    Ok(by_ann)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{divided_power, golden_example, GoldenExample};
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn divided_power_filtration() {
        let q = Rationals;
        let f = coradical_filtration(&divided_power(&q, 4), &AnalysisConfig::default()).unwrap();
        assert_eq!(f.dims(), vec![1, 2, 3, 4, 5]);
        assert_eq!(f.terms[2], Subspace::coordinate(&q, 5, &[0, 1, 2]));
        let f2 = PrimeField::new(2).unwrap();
        let g = coradical_filtration(&divided_power(&f2, 3), &AnalysisConfig::default()).unwrap();
        assert_eq!(g.dims(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn ex63_filtration_and_subcoalgebra_terms() {
        let q = Rationals;
        let c = golden_example(&q, GoldenExample::Ex63).unwrap();
        let f = coradical_filtration(&c, &AnalysisConfig::default()).unwrap();
        assert_eq!(f.dims(), vec![2, 4]);
        assert!(f.terms.iter().all(|t| c.is_subcoalgebra(t)));
    }
}
