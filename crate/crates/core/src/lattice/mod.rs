//! Submodule lattices, brute-force oracles over prime fields and the structural
//! chain and distributivity certificates built on top of them.

mod chain;
mod distributive;
mod lemma;
mod structure;

pub use chain::{chain_type, dual_chain_analysis, is_chain_coalgebra, ChainType, ChainVerdict, DualChainReport};
pub use distributive::{
    annihilator, annihilator_check, is_distributive_coalgebra, stephenson_check, AnnihilatorReport, DistributivityVerdict,
    MethodResult, StephensonReport, Witness,
};
pub use lemma::{bimodule_to_automorphism, product_chain_ring_check, AutomorphismFromBimodule, ProductChainReport};
pub use structure::{block_decomposition, ext_quiver, simple_subcoalgebra_split, Block, BlockDecomposition, QuiverReport};

use std::collections::{BTreeSet, HashMap};

use crate::algebra::Algebra;
use crate::coalgebra::Comodule;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::ActionModule;
use crate::subspace::Subspace;
use crate::AnalysisConfig;

/// Every submodule of a module, sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSnapshot<F: Field> {
    pub ambient: usize,
    pub members: Vec<Subspace<F>>,
}

impl<F: Field> LatticeSnapshot<F> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: &Subspace<F>) -> Option<usize> {
        self.members.binary_search(s).ok()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.dim()).collect()
    }
}

/// Chain and distributivity of a lattice, with failing elements as indices into the snapshot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeProperties {
    pub is_chain: bool,
    pub is_distributive: bool,
    /// Two incomparable members.
    pub incomparable: Option<(usize, usize)>,
    /// `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
    pub failing_triple: Option<(usize, usize, usize)>,
}

fn projective_points<F: Field>(field: &F, dim: usize, cfg: &AnalysisConfig) -> Result<Vec<Vec<F::Elem>>> {
    let q = field
        .order()
        .ok_or_else(|| Error::InvalidField("lattice enumeration needs a finite field".into()))?;
    let needed = u128::from(q).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if needed > u128::from(cfg.budget) {
        return Err(Error::BudgetExceeded {
            needed,
            budget: cfg.budget,
        });
    }
    let elems = field.elements().expect("finite field lists its elements");
    let mut out = Vec::new();
    for idx in 1..needed {
        let mut rest = idx;
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push(elems[(rest % u128::from(q)) as usize].clone());
            rest /= u128::from(q);
        }
        // one representative per line: first nonzero coordinate equal to 1
        if v.iter().find(|x| !field.is_zero(x)).is_some_and(|x| field.is_one(x)) {
            out.push(v);
        }
    }
    Ok(out)
}

/// All submodules: cyclic submodules of every nonzero vector, closed under sums.
pub fn enumerate_submodules<F: Field>(m: &ActionModule<F>, cfg: &AnalysisConfig) -> Result<LatticeSnapshot<F>> {
    let f = m.field();
    let cyclics: BTreeSet<Subspace<F>> = projective_points(f, m.dim(), cfg)?.iter().map(|v| m.cyclic(v)).collect();
    let mut members: BTreeSet<Subspace<F>> = BTreeSet::new();
    members.insert(Subspace::zero(f, m.dim()));
    members.extend(cyclics.iter().cloned());
    let mut frontier: Vec<Subspace<F>> = members.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for z in &cyclics {
                if z.is_subspace_of(x) {
                    continue;
                }
                let s = x.sum(z)?;
                if members.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    Ok(LatticeSnapshot {
        ambient: m.dim(),
        members: members.into_iter().collect(),
    })
}

/// Right coideals of the coalgebra of `m` contained in `m`, i.e. its subcomodules.
pub fn enumerate_subcomodules<F: Field>(m: &Comodule<F>, cfg: &AnalysisConfig) -> Result<LatticeSnapshot<F>> {
    enumerate_submodules(&ActionModule::from_comodule(m), cfg)
}

pub fn enumerate_left_ideals<F: Field>(a: &Algebra<F>, cfg: &AnalysisConfig) -> Result<LatticeSnapshot<F>> {
    enumerate_submodules(&ActionModule::left_regular(a), cfg)
}

/// Meet and join tables as indices into the snapshot.
fn tables<F: Field>(l: &LatticeSnapshot<F>) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
    let n = l.len();
    let index: HashMap<&Subspace<F>, usize> = l.members.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let lookup = |s: &Subspace<F>| {
        index
            .get(s)
            .copied()
            .ok_or_else(|| Error::InvalidComodule("member set is not closed under sum and intersection".into()))
    };
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let (a, b) = (&l.members[i], &l.members[j]);
            let m = lookup(&a.intersect(b)?)?;
            let s = lookup(&a.sum(b)?)?;
            meet[i][j] = m;
            meet[j][i] = m;
            join[i][j] = s;
            join[j][i] = s;
        }
    }
    Ok((meet, join))
}

pub fn lattice_properties<F: Field>(l: &LatticeSnapshot<F>) -> Result<LatticeProperties> {
    let n = l.len();
    let (meet, join) = tables(l)?;
    let mut incomparable = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            if meet[i][j] != i && meet[i][j] != j {
                incomparable = Some((i, j));
                break 'outer;
            }
        }
    }
    let mut failing_triple = None;
    'scan: for a in 0..n {
        for b in 0..n {
            for c in b + 1..n {
                let lhs = meet[a][join[b][c]];
                let rhs = join[meet[a][b]][meet[a][c]];
                if lhs != rhs {
                    failing_triple = Some((a, b, c));
                    break 'scan;
                }
            }
        }
    }
    Ok(LatticeProperties {
        is_chain: incomparable.is_none(),
        is_distributive: failing_triple.is_none(),
        incomparable,
        failing_triple,
    })
}

/// Ambient vector with coordinates `coords` in the basis of `s`.
pub(crate) fn lift<F: Field>(s: &Subspace<F>, coords: &[F::Elem]) -> Vec<F::Elem> {
    s.basis().apply_left(coords)
}

/// `upper / lower` as a comodule, for subcomodules `lower ⊆ upper` of `m`.
pub(crate) fn layer_comodule<F: Field>(m: &Comodule<F>, upper: &Subspace<F>, lower: &Subspace<F>) -> Result<Comodule<F>> {
    let top = m.restrict(upper)?;
    let coords = lower
        .basis_vecs()
        .iter()
        .map(|v| {
            upper
                .coordinates(v)
                .ok_or_else(|| Error::InvalidComodule("lower term is not inside the upper term".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    top.quotient(&Subspace::span(m.field(), upper.dim(), coords)?)
}

/// Jacobson radical as the intersection of the maximal left ideals, over a finite field.
pub fn radical_by_enumeration<F: Field>(a: &Algebra<F>, cfg: &AnalysisConfig) -> Result<Subspace<F>> {
    let f = a.field();
    if a.dim() == 0 {
        return Ok(Subspace::zero(f, 0));
    }
    let lattice = enumerate_left_ideals(a, cfg)?;
    let proper: Vec<&Subspace<F>> = lattice.members.iter().filter(|s| !s.is_full()).collect();
    let mut radical = Subspace::full(f, a.dim());
    for s in &proper {
        let maximal = !proper.iter().any(|t| t.dim() > s.dim() && s.is_subspace_of(t));
        if maximal {
            radical = radical.intersect(s)?;
        }
    }
    Ok(radical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_product, ground_field, polynomial_quotient};
    use crate::constructors::divided_power;
    use crate::field::PrimeField;
    use crate::poly::Poly;

    #[test]
    fn divided_power_lattice_over_gf2_is_the_filtration() {
        let f2 = PrimeField::new(2).unwrap();
        let cfg = AnalysisConfig::default();
        let l = enumerate_subcomodules(&divided_power(&f2, 3).regular_comodule(), &cfg).unwrap();
        assert_eq!(l.dims(), vec![0, 1, 2, 3, 4]);
        let p = lattice_properties(&l).unwrap();
        assert!(p.is_chain && p.is_distributive);
    }

    #[test]
    fn left_ideals_over_gf2() {
        let f2 = PrimeField::new(2).unwrap();
        let cfg = AnalysisConfig::default();
        let a = polynomial_quotient(&f2, &Poly::monomial(&f2, f2.one(), 3)).unwrap();
        let l = enumerate_left_ideals(&a, &cfg).unwrap();
        assert_eq!(l.dims(), vec![0, 1, 2, 3]);
        let kk = direct_product(&[ground_field(&f2), ground_field(&f2)]).unwrap();
        let l = enumerate_left_ideals(&kk, &cfg).unwrap();
        assert_eq!(l.len(), 4);
        let p = lattice_properties(&l).unwrap();
        assert!(!p.is_chain && p.is_distributive);
        assert_eq!(radical_by_enumeration(&a, &cfg).unwrap(), Subspace::coordinate(&f2, 3, &[1, 2]));
        assert!(radical_by_enumeration(&kk, &cfg).unwrap().is_zero());
    }

    #[test]
    fn budget_is_enforced() {
        let f2 = PrimeField::new(2).unwrap();
        let cfg = AnalysisConfig { budget: 8, ..AnalysisConfig::default() };
        let err = enumerate_subcomodules(&divided_power(&f2, 3).regular_comodule(), &cfg).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { needed: 16, budget: 8 }));
    }
}
