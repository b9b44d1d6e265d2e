//! Chain coalgebras: Loewy-layer certification, their type and the dual chain ring.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{enumerate_subcomodules, lattice_properties, layer_comodule};
use crate::algebra::{division_check, is_left_chain_ring, principal_left_ideal, Algebra, DivisionCheck};
use crate::coalgebra::{coradical_filtration, Coalgebra, Filtration, SimplicityCheck};
use crate::error::{Error, Result};
use crate::factor::Factorable;
use crate::field::Field;
use crate::matrix::vec_ops;
use crate::report::Verdict;
use crate::subspace::Subspace;
use crate::AnalysisConfig;

const SAMPLES: usize = 100;
const SAMPLE_SEED: u64 = 0x00c0_a16e;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainVerdict<F: Field> {
    pub verdict: Verdict,
    /// The coradical filtration, which is the Loewy series of `C` as a right comodule.
    pub filtration: Filtration<F>,
    /// Simplicity of `C_n / C_{n-1}`, up to the first layer that is not simple.
    pub layers: Vec<SimplicityCheck>,
    pub failing_layer: Option<usize>,
    /// Total order of the enumerated coideal lattice, when the field is finite and the budget allows.
    pub enumerated: Option<bool>,
}

/// Whether the right coideals of `C` form a chain: every Loewy layer must be simple.
///
/// Over a finite field within budget the answer is cross-checked against the enumerated
/// lattice; a mismatch is reported as `MethodDisagreement`.
pub fn is_chain_coalgebra<F: Factorable>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<ChainVerdict<F>> {
    let filtration = coradical_filtration(c, cfg)?;
    let m = c.regular_comodule();
    let mut verdict = Verdict::Yes;
    let mut layers = Vec::new();
    let mut failing_layer = None;
    let mut lower = Subspace::zero(c.field(), c.dim());
    for (n, upper) in filtration.terms.iter().enumerate() {
        let check = layer_comodule(&m, upper, &lower)?.is_simple(cfg)?;
        verdict = verdict.and(check.verdict);
        let refuted = check.verdict == Verdict::No;
        layers.push(check);
        if refuted {
            failing_layer = Some(n);
            break;
        }
        lower = upper.clone();
    }
    let enumerated = match c.field().order() {
        None => None,
        Some(_) => match enumerate_subcomodules(&m, cfg) {
            Ok(l) => Some(lattice_properties(&l)?.is_chain),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        },
    };
    if let Some(total) = enumerated {
        if verdict != Verdict::Unknown && total != verdict.is_yes() {
            return Err(Error::MethodDisagreement(format!(
                "Loewy layers say {verdict:?}, enumerated lattice total order is {total}"
            )));
        }
    }
    Ok(ChainVerdict {
        verdict,
        filtration,
        layers,
        failing_layer,
        enumerated,
    })
}

fn require_chain<F: Factorable>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<ChainVerdict<F>> {
    let v = is_chain_coalgebra(c, cfg)?;
    match v.verdict {
        Verdict::Yes => Ok(v),
        Verdict::No => Err(Error::NotChain(format!("Loewy layer {} is not simple", v.failing_layer.unwrap_or(0)))),
        Verdict::Unknown => Err(Error::Unknown("chain property undecided".into())),
    }
}

/// `D = (C₀)*` for a chain coalgebra, with its division certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainType<F: Field> {
    pub algebra: Algebra<F>,
    pub division: DivisionCheck<F>,
}

pub fn chain_type<F: Factorable>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<ChainType<F>> {
    let v = require_chain(c, cfg)?;
    let algebra = c.restrict(&v.filtration.terms[0])?.convolution_dual();
    let division = division_check(&algebra, cfg)?;
    Ok(ChainType { algebra, division })
}

/// The chain ring `A = C*` of a chain coalgebra, checked against the filtration of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualChainReport<F: Field> {
    pub dual: Algebra<F>,
    pub is_local: bool,
    /// `t` with `J = A·t`; absent when `J = 0`.
    pub generator: Option<Vec<F::Elem>>,
    /// Dimensions of `A = J⁰ ⊇ J ⊇ … ⊇ 0`.
    pub radical_dims: Vec<usize>,
    /// `J^i = A·t^i` for every `i`.
    pub powers_principal: bool,
    /// `C_n^⊥ = J^{n+1}`, one entry per filtration term.
    pub perp_matches: Vec<bool>,
    pub samples: usize,
    /// Samples written as `u·t^n` with `u` a unit.
    pub decomposed: usize,
    pub domain_property: String,
}

impl<F: Field> DualChainReport<F> {
    pub fn passes(&self) -> bool {
        self.is_local && self.powers_principal && self.perp_matches.iter().all(|&b| b) && self.decomposed == self.samples
    }
}

/// Largest `n` with `a ∈ J^n`.
fn level<F: Field>(powers: &[Subspace<F>], a: &[F::Elem]) -> usize {
    powers.iter().rposition(|p| p.contains(a)).unwrap_or(0)
}

pub fn dual_chain_analysis<F: Factorable>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<DualChainReport<F>> {
    let v = require_chain(c, cfg)?;
    let a = c.convolution_dual();
    let f = a.field();
    let cert = is_left_chain_ring(&a, cfg)?;
    let powers = &cert.radical_powers;
    let zero = Subspace::zero(f, a.dim());
    let t = cert.generator.clone();
    let t_or_zero = t.clone().unwrap_or_else(|| vec_ops::zeros(f, a.dim()));
    let powers_principal = powers
        .iter()
        .enumerate()
        .skip(1)
        .all(|(i, p)| principal_left_ideal(&a, &a.power(&t_or_zero, i)) == *p);
    let perp_matches = v
        .filtration
        .terms
        .iter()
        .enumerate()
        .map(|(n, term)| term.orthogonal() == *powers.get(n + 1).unwrap_or(&zero))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut decomposed = 0;
    for _ in 0..SAMPLES {
        let x = loop {
            let x: Vec<F::Elem> = (0..a.dim()).map(|_| f.sample(&mut rng, 5)).collect();
            if !vec_ops::is_zero(f, &x) {
                break x;
            }
        };
        let n = level(powers, &x);
        let tn = a.power(&t_or_zero, n);
        if let Some((u, _)) = a.right_mult(&tn).solve(&x)? {
            if a.is_unit(&u) && a.product(&u, &tn) == x {
                decomposed += 1;
            }
        }
    }
    Ok(DualChainReport {
        is_local: cert.residue.verdict == Verdict::Yes && cert.is_chain,
        generator: t,
        radical_dims: powers.iter().map(|p| p.dim()).collect(),
        powers_principal,
        perp_matches,
        samples: SAMPLES,
        decomposed,
        domain_property: "untestable at finite truncation".into(),
        dual: a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{coproduct, divided_power, golden_example, GoldenExample};
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn divided_power_and_gaussian_table_are_chains() {
        let q = Rationals;
        let cfg = AnalysisConfig::default();
        let v = is_chain_coalgebra(&divided_power(&q, 3), &cfg).unwrap();
        assert_eq!(v.verdict, Verdict::Yes);
        assert_eq!(v.filtration.dims(), vec![1, 2, 3, 4]);
        let ex63 = golden_example(&q, GoldenExample::Ex63).unwrap();
        assert_eq!(is_chain_coalgebra(&ex63, &cfg).unwrap().verdict, Verdict::Yes);
        let ty = chain_type(&ex63, &cfg).unwrap();
        assert_eq!(ty.algebra.dim(), 2);
        assert_eq!(ty.division.verdict, Verdict::Yes);
        assert_eq!(chain_type(&divided_power(&q, 2), &cfg).unwrap().algebra.dim(), 1);
    }

    #[test]
    fn coproduct_is_not_a_chain() {
        let f2 = PrimeField::new(2).unwrap();
        let cfg = AnalysisConfig::default();
        let (c, _) = coproduct(&[divided_power(&f2, 1), divided_power(&f2, 1)]).unwrap();
        let v = is_chain_coalgebra(&c, &cfg).unwrap();
        assert_eq!(v.verdict, Verdict::No);
        assert_eq!(v.failing_layer, Some(0));
        assert_eq!(v.enumerated, Some(false));
        assert!(matches!(chain_type(&c, &cfg), Err(Error::NotChain(_))));
    }

    #[test]
    fn dual_of_divided_power_is_truncated_polynomials() {
        let q = Rationals;
        let cfg = AnalysisConfig::default();
        let r = dual_chain_analysis(&divided_power(&q, 3), &cfg).unwrap();
        assert!(r.passes());
        assert_eq!(r.radical_dims, vec![4, 3, 2, 1, 0]);
        assert_eq!(r.perp_matches.len(), 4);
        let ex63 = golden_example(&q, GoldenExample::Ex63).unwrap();
        let r = dual_chain_analysis(&ex63, &cfg).unwrap();
        assert!(r.passes());
        assert_eq!(r.radical_dims, vec![4, 2, 0]);
    }
}
