//! Distributivity of coideal lattices: enumerated, Stephenson, structural and dual-ideal
//! verdicts, plus the annihilator correspondence.

use std::collections::BTreeSet;

use super::chain::is_chain_coalgebra;
use super::structure::block_decomposition;
use super::{enumerate_left_ideals, enumerate_subcomodules, lattice_properties, lift, LatticeSnapshot};
use crate::algebra::division_check;
use crate::coalgebra::{coradical_filtration, Coalgebra, Comodule};
use crate::error::{Error, Result};
use crate::factor::Factorable;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::ActionModule;
use crate::report::Verdict;
use crate::subspace::Subspace;
use crate::AnalysisConfig;

/// Concrete evidence that a comodule is not distributive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<F: Field> {
    /// Subcomodules with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
    Triple { a: Subspace<F>, b: Subspace<F>, c: Subspace<F> },
    /// Subcomodules `N`, `L` and a nonzero comodule map `N/(N∩L) → L/(N∩L)`.
    Stephenson { n: Subspace<F>, l: Subspace<F>, map: Matrix<F> },
}

impl<F: Field> Witness<F> {
    /// Recomputes the failure from scratch against `m`.
    pub fn validate(&self, m: &Comodule<F>) -> bool {
        self.check(m).unwrap_or(false)
    }

    fn check(&self, m: &Comodule<F>) -> Result<bool> {
        match self {
            Witness::Triple { a, b, c } => {
                if ![a, b, c].iter().all(|s| s.ambient() == m.dim() && m.is_subcomodule(s)) {
                    return Ok(false);
                }
                let lhs = a.intersect(&b.sum(c)?)?;
                let rhs = a.intersect(b)?.sum(&a.intersect(c)?)?;
                Ok(lhs != rhs)
            }
            Witness::Stephenson { n, l, map } => {
                if ![n, l].iter().all(|s| s.ambient() == m.dim() && m.is_subcomodule(s)) {
                    return Ok(false);
                }
                let module = ActionModule::from_comodule(m);
                let meet = n.intersect(l)?;
                let top = module.subquotient(n, &meet)?;
                let bottom = module.subquotient(l, &meet)?;
                Ok(!map.is_zero() && top.is_hom(&bottom, map))
            }
        }
    }
}

/// A nonzero map `N/(N∩L) → L/(N∩L)`, if one exists.
fn stephenson_map<F: Field>(module: &ActionModule<F>, n: &Subspace<F>, l: &Subspace<F>) -> Result<Option<Matrix<F>>> {
    let meet = n.intersect(l)?;
    if meet == *n || meet == *l {
        return Ok(None);
    }
    let top = module.subquotient(n, &meet)?;
    let bottom = module.subquotient(l, &meet)?;
    Ok(top.hom_basis(&bottom)?.into_iter().next())
}

/// First Stephenson pair among ordered pairs of `members`, and the number of pairs examined.
fn stephenson_scan<F: Field>(module: &ActionModule<F>, members: &[Subspace<F>]) -> Result<(usize, Option<Witness<F>>)> {
    let mut checked = 0;
    for n in members {
        for l in members {
            if n.is_subspace_of(l) || l.is_subspace_of(n) {
                continue;
            }
            checked += 1;
            if let Some(map) = stephenson_map(module, n, l)? {
                let w = Witness::Stephenson {
                    n: n.clone(),
                    l: l.clone(),
                    map,
                };
                return Ok((checked, Some(w)));
            }
        }
    }
    Ok((checked, None))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StephensonReport<F: Field> {
    /// `Hom(N/(N∩L), L/(N∩L)) = 0` for every pair.
    pub passes: bool,
    pub members: usize,
    pub pairs_checked: usize,
    pub witness: Option<Witness<F>>,
}

fn stephenson_on<F: Field>(m: &Comodule<F>, lattice: &LatticeSnapshot<F>) -> Result<StephensonReport<F>> {
    let (pairs_checked, witness) = stephenson_scan(&ActionModule::from_comodule(m), &lattice.members)?;
    Ok(StephensonReport {
        passes: witness.is_none(),
        members: lattice.len(),
        pairs_checked,
        witness,
    })
}

/// Stephenson's criterion over the enumerated subcomodule lattice.
pub fn stephenson_check<F: Field>(m: &Comodule<F>, cfg: &AnalysisConfig) -> Result<StephensonReport<F>> {
    stephenson_on(m, &enumerate_subcomodules(m, cfg)?)
}

/// `Ann(N) = {f ∈ C* : N ↼ f = 0}`, solved as a kernel.
pub fn annihilator<F: Field>(c: &Coalgebra<F>, n: &Subspace<F>) -> Subspace<F> {
    let f = c.field();
    let dim = c.dim();
    let mut rows = Matrix::zeros(f, 0, dim);
    for v in n.basis_vecs() {
        // (v ↼ f)_j = Σ_{i,k} v_k d(k,i,j) f_i
        let block = Matrix::from_fn(f, dim, dim, |j, i| {
            v.iter().enumerate().fold(f.zero(), |acc, (k, vk)| {
                if f.is_zero(vk) {
                    acc
                } else {
                    f.add(&acc, &f.mul(vk, c.d(k, i, j)))
                }
            })
        });
        rows = rows.vstack(&block);
    }
    rows.kernel()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorReport {
    /// `enumerated` for the full coideal lattice, `filtration` for the coradical filtration terms.
    pub mode: String,
    pub members: usize,
    pub pairs_checked: usize,
    /// Pairs with `Ann(N+L) ≠ Ann(N) ∩ Ann(L)`.
    pub join_failures: Vec<(usize, usize)>,
    /// Pairs with `Ann(N∩L) ≠ Ann(N) + Ann(L)`.
    pub meet_failures: Vec<(usize, usize)>,
    pub injective: bool,
}

impl AnnihilatorReport {
    pub fn passes(&self) -> bool {
        self.join_failures.is_empty() && self.meet_failures.is_empty() && self.injective
    }
}

fn annihilator_on<F: Field>(c: &Coalgebra<F>, members: &[Subspace<F>], mode: &str) -> Result<AnnihilatorReport> {
    let anns: Vec<Subspace<F>> = members.iter().map(|n| annihilator(c, n)).collect();
    let mut report = AnnihilatorReport {
        mode: mode.into(),
        members: members.len(),
        pairs_checked: 0,
        join_failures: Vec::new(),
        meet_failures: Vec::new(),
        injective: anns.iter().collect::<BTreeSet<_>>().len() == members.len(),
    };
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            report.pairs_checked += 1;
            let join = annihilator(c, &members[i].sum(&members[j])?);
            if join != anns[i].intersect(&anns[j])? {
                report.join_failures.push((i, j));
            }
            let meet = annihilator(c, &members[i].intersect(&members[j])?);
            if meet != anns[i].sum(&anns[j])? {
                report.meet_failures.push((i, j));
            }
        }
    }
    Ok(report)
}

/// Checks that `Ann` turns sums into intersections, intersections into sums, and is injective.
///
/// Over a finite field all right coideals are enumerated (subject to the budget); over an
/// infinite field the coradical filtration terms and `0` are used.
pub fn annihilator_check<F: Field>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<AnnihilatorReport> {
    match c.field().order() {
        Some(_) => {
            let lattice = enumerate_subcomodules(&c.regular_comodule(), cfg)?;
            annihilator_on(c, &lattice.members, "enumerated")
        }
        None => {
            let mut members = vec![Subspace::zero(c.field(), c.dim())];
            members.extend(coradical_filtration(c, cfg)?.terms);
            members.dedup();
            annihilator_on(c, &members, "filtration")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MethodResult {
    pub method: String,
    pub verdict: Verdict,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributivityVerdict<F: Field> {
    pub verdict: Verdict,
    pub methods: Vec<MethodResult>,
    /// Witnesses against distributivity of `C` as a right comodule over itself.
    pub witnesses: Vec<Witness<F>>,
    /// Some method was skipped because of the enumeration budget or the factorization cap.
    pub degraded: bool,
}

/// Complement of the submodule `x` in a semisimple module, through a projection onto `x`.
fn complement<F: Field>(module: &ActionModule<F>, x: &Subspace<F>) -> Result<Option<Subspace<F>>> {
    let f = module.field();
    let d = module.dim();
    let homs = module.hom_basis(module)?;
    if homs.is_empty() {
        return Ok(None);
    }
    // π = Σ λ_h H_h with π|x = id and g·π = 0 for g ⊥ x
    let mut columns: Vec<Vec<F::Elem>> = Vec::with_capacity(homs.len());
    let xs = x.basis_vecs();
    let perp = x.orthogonal().basis_vecs();
    for h in &homs {
        let mut col = Vec::new();
        for b in &xs {
            col.extend(h.apply(b));
        }
        for g in &perp {
            col.extend(h.apply_left(g));
        }
        columns.push(col);
    }
    let mut rhs = Vec::new();
    for b in &xs {
        rhs.extend(b.iter().cloned());
    }
    rhs.extend(std::iter::repeat(f.zero()).take(perp.len() * d));
    let system = Matrix::from_columns(f, rhs.len(), columns)?;
    let Some((lambda, _)) = system.solve(&rhs)? else {
        return Ok(None);
    };
    let mut pi = Matrix::zeros(f, d, d);
    for (c, h) in lambda.iter().zip(&homs) {
        pi = pi.add(&h.scale(c));
    }
    Ok(Some(pi.kernel()))
}

/// A proper nonzero subcomodule of `s` found from a zero divisor of its endomorphisms.
fn split_semisimple<F: Factorable>(
    m: &Comodule<F>,
    s: &Subspace<F>,
    cfg: &AnalysisConfig,
) -> Result<Option<(Subspace<F>, Subspace<F>)>> {
    let local = m.restrict(s)?;
    let (end, basis) = local.endomorphism_algebra()?;
    let dc = division_check(&end, cfg)?;
    let Some((x, _)) = dc.zero_divisors else {
        return Ok(None);
    };
    let mut map = Matrix::zeros(m.field(), local.dim(), local.dim());
    for (c, b) in x.iter().zip(&basis) {
        map = map.add(&b.scale(c));
    }
    let kernel = map.kernel();
    let module = ActionModule::from_comodule(&local);
    let Some(other) = complement(&module, &kernel)? else {
        return Ok(None);
    };
    let up = |t: &Subspace<F>| Subspace::span(m.field(), m.dim(), t.basis_vecs().iter().map(|v| lift(s, v)).collect());
    Ok(Some((up(&kernel)?, up(&other)?)))
}

/// Searches a pool of natural coideals for a Stephenson pair.
fn structural_witness<F: Factorable>(
    c: &Coalgebra<F>,
    simples: &[Subspace<F>],
    arrows: &[(usize, usize)],
    extra: Vec<Subspace<F>>,
) -> Result<Option<Witness<F>>> {
    let f = c.field();
    let m = c.regular_comodule();
    let module = ActionModule::from_comodule(&m);
    let mut pool: BTreeSet<Subspace<F>> = extra.into_iter().collect();
    pool.extend(simples.iter().cloned());
    for k in 0..c.dim() {
        pool.insert(module.cyclic(&c.basis_vector(k)));
    }
    for &(i, j) in arrows {
        let w = c.wedge(&simples[i], &simples[j])?;
        for v in w.basis_vecs() {
            pool.insert(module.cyclic(&v));
        }
    }
    let base: Vec<Subspace<F>> = pool.iter().cloned().collect();
    for p in &base {
        for s in simples {
            pool.insert(p.sum(s)?);
        }
    }
    pool.remove(&Subspace::zero(f, c.dim()));
    let members: Vec<Subspace<F>> = pool.into_iter().collect();
    Ok(stephenson_scan(&module, &members)?.1)
}

/// Structural test: simples are simple comodules, blocks are chains, blocks are unrelated.
fn structural<F: Factorable>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<(MethodResult, Option<Witness<F>>)> {
    let f = c.field();
    let m = c.regular_comodule();
    let blocks = block_decomposition(c, cfg)?;
    let simples = &blocks.quiver.vertices;
    let mut failure: Option<String> = None;
    let mut extra = Vec::new();
    if !blocks.is_coproduct() {
        return Ok((
            MethodResult {
                method: "structural".into(),
                verdict: Verdict::Unknown,
                note: format!("blocks do not decompose C: {}", blocks.report.summary()),
            },
            None,
        ));
    }
    for (i, s) in simples.iter().enumerate() {
        let check = m.restrict(s)?.is_simple(cfg)?;
        if check.verdict == Verdict::No {
            failure.get_or_insert(format!("simple subcoalgebra {i} has a repeated simple comodule"));
            if let Some((x, y)) = split_semisimple(&m, s, cfg)? {
                extra.push(x);
                extra.push(y);
            }
        }
    }
    let mut undecided = false;
    for (b, block) in blocks.blocks.iter().enumerate() {
        match is_chain_coalgebra(&block.embedding.source, cfg)?.verdict {
            Verdict::Yes => {}
            Verdict::No => {
                failure.get_or_insert(format!("block {b} is not a chain coalgebra"));
            }
            Verdict::Unknown => undecided = true,
        }
    }
    if failure.is_none() && blocks.blocks.len() > 1 {
        let filtration = coradical_filtration(c, cfg)?;
        let module = ActionModule::from_comodule(&m);
        let layers = |b: &Subspace<F>| -> Result<Vec<ActionModule<F>>> {
            let mut out = Vec::new();
            let mut lower = Subspace::zero(f, c.dim());
            for term in &filtration.terms {
                let upper = term.intersect(b)?;
                if upper != lower {
                    out.push(module.subquotient(&upper, &lower)?);
                }
                lower = upper;
            }
            Ok(out)
        };
        let all: Vec<Vec<ActionModule<F>>> = blocks.blocks.iter().map(|b| layers(&b.subspace)).collect::<Result<_>>()?;
        'pairs: for (i, li) in all.iter().enumerate() {
            for (j, lj) in all.iter().enumerate() {
                if i == j {
                    continue;
                }
                for x in li {
                    for y in lj {
                        if x.hom_space(y)?.dim() > 0 {
                            failure = Some(format!("blocks {i} and {j} are related"));
                            break 'pairs;
                        }
                    }
                }
            }
        }
    }
    let (verdict, note, witness) = match failure {
        Some(reason) => {
            let w = structural_witness(c, simples, &blocks.quiver.arrows, extra)?;
            let note = if w.is_some() {
                reason
            } else {
                format!("{reason}; no Stephenson pair found among the structural candidates")
            };
            (Verdict::No, note, w)
        }
        None if undecided => (Verdict::Unknown, "a block chain test is undecided".into(), None),
        None => (
            Verdict::Yes,
            format!("{} unrelated chain blocks", blocks.blocks.len()),
            None,
        ),
    };
    Ok((
        MethodResult {
            method: "structural".into(),
            verdict,
            note,
        },
        witness,
    ))
}

fn skipped(method: &str, note: &str) -> MethodResult {
    MethodResult {
        method: method.into(),
        verdict: Verdict::Unknown,
        note: note.into(),
    }
}

/// Distributivity of the right coideal lattice of `C`.
///
/// The structural test always runs. Over a finite field within budget three enumerated
/// oracles run as well: the triple scan of the coideal lattice, Stephenson's criterion
/// on it, and the triple scan of the left ideals of `C*`. Definite verdicts that
/// disagree are reported as `MethodDisagreement`.
pub fn is_distributive_coalgebra<F: Factorable>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<DistributivityVerdict<F>> {
    let mut methods = Vec::new();
    let mut witnesses = Vec::new();
    let mut degraded = false;
    match structural(c, cfg) {
        Ok((r, w)) => {
            methods.push(r);
            witnesses.extend(w);
        }
        Err(e) if e.is_degradation() => {
            degraded = true;
            methods.push(skipped("structural", &e.to_string()));
        }
        Err(e) => return Err(e),
    }
    let m = c.regular_comodule();
    if c.field().order().is_none() {
        for name in ["lattice", "stephenson", "dual_ideal_lattice"] {
            methods.push(skipped(name, "enumeration needs a finite field"));
        }
    } else {
        match enumerate_subcomodules(&m, cfg) {
            Ok(lattice) => {
                let props = lattice_properties(&lattice)?;
                if let Some((a, b, cc)) = props.failing_triple {
                    witnesses.push(Witness::Triple {
                        a: lattice.members[a].clone(),
                        b: lattice.members[b].clone(),
                        c: lattice.members[cc].clone(),
                    });
                }
                methods.push(MethodResult {
                    method: "lattice".into(),
                    verdict: Verdict::from_bool(props.is_distributive),
                    note: format!("{} right coideals", lattice.len()),
                });
                let st = stephenson_on(&m, &lattice)?;
                methods.push(MethodResult {
                    method: "stephenson".into(),
                    verdict: Verdict::from_bool(st.passes),
                    note: format!("{} incomparable pairs examined", st.pairs_checked),
                });
                witnesses.extend(st.witness);
            }
            Err(e @ Error::BudgetExceeded { .. }) => {
                degraded = true;
                methods.push(skipped("lattice", &e.to_string()));
                methods.push(skipped("stephenson", &e.to_string()));
            }
            Err(e) => return Err(e),
        }
        match enumerate_left_ideals(&c.convolution_dual(), cfg) {
            Ok(ideals) => {
                let props = lattice_properties(&ideals)?;
                methods.push(MethodResult {
                    method: "dual_ideal_lattice".into(),
                    verdict: Verdict::from_bool(props.is_distributive),
                    note: format!("{} left ideals of the dual algebra", ideals.len()),
                });
            }
            Err(e @ Error::BudgetExceeded { .. }) => {
                degraded = true;
                methods.push(skipped("dual_ideal_lattice", &e.to_string()));
            }
            Err(e) => return Err(e),
        }
    }
    let definite: BTreeSet<bool> = methods
        .iter()
        .filter(|r| r.verdict != Verdict::Unknown)
        .map(|r| r.verdict.is_yes())
        .collect();
    let verdict = match definite.len() {
        0 => Verdict::Unknown,
        1 => Verdict::from_bool(*definite.iter().next().unwrap()),
        _ => {
            let summary: Vec<String> = methods.iter().map(|r| format!("{}={:?}", r.method, r.verdict)).collect();
            return Err(Error::MethodDisagreement(summary.join(", ")));
        }
    };
    Ok(DistributivityVerdict {
        verdict,
        methods,
        witnesses,
        degraded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{coproduct, divided_power, truncated_path_coalgebra, QuiverPresentation};
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn repeated_simple_comodule_is_not_distributive() {
        let f2 = PrimeField::new(2).unwrap();
        let cfg = AnalysisConfig::default();
        let s = divided_power(&f2, 1).regular_comodule();
        let ss = s.direct_sum(&s).unwrap();
        let r = stephenson_check(&ss, &cfg).unwrap();
        assert!(!r.passes);
        let w = r.witness.unwrap();
        assert!(w.validate(&ss));
        let l = enumerate_subcomodules(&ss, &cfg).unwrap();
        assert!(!lattice_properties(&l).unwrap().is_distributive);
    }

    #[test]
    fn coproduct_of_two_points_is_distributive() {
        let f2 = PrimeField::new(2).unwrap();
        let cfg = AnalysisConfig::default();
        let (c, _) = coproduct(&[divided_power(&f2, 1), divided_power(&f2, 1)]).unwrap();
        let v = is_distributive_coalgebra(&c, &cfg).unwrap();
        assert_eq!(v.verdict, Verdict::Yes);
        assert_eq!(v.methods.len(), 4);
        assert!(v.witnesses.is_empty());
    }

    #[test]
    fn a2_is_not_distributive() {
        let f2 = PrimeField::new(2).unwrap();
        let cfg = AnalysisConfig::default();
        let c = truncated_path_coalgebra(&f2, &QuiverPresentation::a2(), 1).unwrap();
        let v = is_distributive_coalgebra(&c, &cfg).unwrap();
        assert_eq!(v.verdict, Verdict::No);
        assert!(v.methods.iter().all(|r| r.verdict == Verdict::No));
        let m = c.regular_comodule();
        assert!(!v.witnesses.is_empty());
        assert!(v.witnesses.iter().all(|w| w.validate(&m)));
    }

    #[test]
    fn structural_verdict_over_the_rationals() {
        let q = Rationals;
        let cfg = AnalysisConfig::default();
        let c = truncated_path_coalgebra(&q, &QuiverPresentation::a2(), 1).unwrap();
        let v = is_distributive_coalgebra(&c, &cfg).unwrap();
        assert_eq!(v.verdict, Verdict::No);
        assert!(v.witnesses[0].validate(&c.regular_comodule()));
        let v = is_distributive_coalgebra(&divided_power(&q, 3), &cfg).unwrap();
        assert_eq!(v.verdict, Verdict::Yes);
    }

    #[test]
    fn annihilators_of_divided_power() {
        let q = Rationals;
        let cfg = AnalysisConfig::default();
        let c = divided_power(&q, 2);
        assert_eq!(annihilator(&c, &Subspace::coordinate(&q, 3, &[0])), Subspace::coordinate(&q, 3, &[1, 2]));
        assert!(annihilator(&c, &Subspace::full(&q, 3)).is_zero());
        let r = annihilator_check(&c, &cfg).unwrap();
        assert_eq!(r.mode, "filtration");
        assert!(r.passes());
        let f2 = PrimeField::new(2).unwrap();
        let r = annihilator_check(&divided_power(&f2, 3), &cfg).unwrap();
        assert_eq!(r.members, 5);
        assert!(r.passes());
    }
}
