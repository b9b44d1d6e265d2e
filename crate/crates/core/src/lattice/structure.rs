//! Simple subcoalgebras, the Ext-quiver and the block decomposition.

use std::fmt::Write as _;

use super::lift;
use crate::algebra::{division_check, Algebra};
use crate::coalgebra::{Coalgebra, CoalgebraMap};
use crate::error::{Error, Result};
use crate::factor::Factorable;
use crate::field::Field;
use crate::matrix::{vec_ops, Matrix};
use crate::poly::{krylov_minimal_polynomial, Poly};
use crate::report::{AxiomReport, Verdict};
use crate::subspace::Subspace;
use crate::AnalysisConfig;

/// `p(x)` in the corner `eA`, where `e` is a central idempotent with `x = e·x`.
fn corner_eval<F: Field>(a: &Algebra<F>, p: &Poly<F>, x: &[F::Elem], e: &[F::Elem]) -> Vec<F::Elem> {
    let f = a.field();
    let lx = a.left_mult(x);
    let mut acc = vec_ops::zeros(f, a.dim());
    for c in p.coeffs().iter().rev() {
        acc = lx.apply(&acc);
        vec_ops::axpy(f, &mut acc, c, e);
    }
    acc
}

/// Splits `e` along the factorization of the minimal polynomial of `x` in `eA`.
fn split_by<F: Factorable>(
    a: &Algebra<F>,
    e: &[F::Elem],
    x: &[F::Elem],
    cfg: &AnalysisConfig,
) -> Result<Option<Vec<Vec<F::Elem>>>> {
    let f = a.field();
    let lx = a.left_mult(x);
    let m = krylov_minimal_polynomial(f, e.to_vec(), |v| lx.apply(v));
    let factors = f.factor(&m, cfg.degree_cap).map_err(|err| match err {
        Error::DegreeCapExceeded { degree, cap } => Error::Unknown(format!(
            "central minimal polynomial of degree {degree} is beyond the factorization cap {cap}"
        )),
        other => other,
    })?;
    if factors.len() < 2 {
        return Ok(None);
    }
    let parts: Vec<Poly<F>> = factors
        .iter()
        .map(|(p, k)| (1..*k).fold(p.clone(), |acc, _| acc.mul(p)))
        .collect();
    let mut out = Vec::with_capacity(parts.len());
    for (i, q) in parts.iter().enumerate() {
        let rest = parts
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(Poly::one(f), |acc, (_, p)| acc.mul(p));
        // s·rest ≡ 1 mod q, so s·rest(x) is the idempotent of the q-part
        let (_, s, _) = rest.ext_gcd(q);
        let c = s.mul(&rest).rem(&m);
        out.push(corner_eval(a, &c, x, e));
    }
    Ok(Some(out))
}

/// `eZ` as an algebra with unit `e`, on the RREF basis of `corner`.
fn corner_algebra<F: Field>(a: &Algebra<F>, corner: &Subspace<F>, e: &[F::Elem]) -> Algebra<F> {
    let basis = corner.basis_vecs();
    let coords = |v: &[F::Elem]| corner.coordinates(v).expect("corner is closed under products");
    let unit = coords(e);
    Algebra::from_fn(a.field(), basis.len(), unit, |i, j| coords(&a.product(&basis[i], &basis[j])))
}

fn refine<F: Factorable>(
    a: &Algebra<F>,
    center: &[Vec<F::Elem>],
    e: &[F::Elem],
    cfg: &AnalysisConfig,
) -> Result<Option<Vec<Vec<F::Elem>>>> {
    let f = a.field();
    let vecs = center.iter().map(|z| a.product(e, z)).collect();
    let corner = Subspace::span(f, a.dim(), vecs)?;
    if corner.dim() <= 1 {
        return Ok(None);
    }
    for x in corner.basis_vecs() {
        if let Some(parts) = split_by(a, e, &x, cfg)? {
            return Ok(Some(parts));
        }
    }
    // every basis element has an irreducible minimal polynomial; certify the corner
    let local = corner_algebra(a, &corner, e);
    let dc = division_check(&local, cfg)?;
    match dc.verdict {
        Verdict::Yes => Ok(None),
        Verdict::Unknown => Err(Error::Unknown(format!("central corner of dimension {}: {}", corner.dim(), dc.note))),
        Verdict::No => {
            let (x, _) = dc
                .zero_divisors
                .ok_or_else(|| Error::Unknown("division test refuted without zero divisors".into()))?;
            split_by(a, e, &lift(&corner, &x), cfg)?
                .map(Some)
                .ok_or_else(|| Error::Unknown("zero divisor in the center does not split".into()))
        }
    }
}

/// Primitive central idempotents of a semisimple algebra.
fn central_idempotents<F: Factorable>(a: &Algebra<F>, cfg: &AnalysisConfig) -> Result<Vec<Vec<F::Elem>>> {
    let center = a.center().basis_vecs();
    let mut done = Vec::new();
    let mut todo = vec![a.unit().to_vec()];
    while let Some(e) = todo.pop() {
        match refine(a, &center, &e, cfg)? {
            Some(parts) => todo.extend(parts),
            None => done.push(e),
        }
    }
    Ok(done)
}

/// The simple subcoalgebras whose sum is the coradical, sorted by pivot columns.
///
/// Primitive central idempotents of `C₀*` are found by factoring minimal polynomials of
/// central elements and recombining with the Chinese remainder theorem; each block is
/// `e ⇀ C₀`. Fails with `Unknown` when a needed factorization is above the cap.
pub fn simple_subcoalgebra_split<F: Factorable>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<Vec<Subspace<F>>> {
    if c.dim() == 0 {
        return Ok(Vec::new());
    }
    let f = c.field();
    let c0 = c.regular_comodule().socle(cfg)?;
    let sub = c.restrict(&c0)?;
    let dual = sub.convolution_dual();
    let mut out = Vec::new();
    for e in central_idempotents(&dual, cfg)? {
        let local = sub.left_hit_matrix(&e).image();
        let vecs = local.basis_vecs().iter().map(|v| lift(&c0, v)).collect();
        out.push(Subspace::span(f, c.dim(), vecs)?);
    }
    // by pivot columns, so simples follow the basis order
    out.sort_by(|a, b| a.pivots().cmp(b.pivots()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Vertices are simple subcoalgebras; `(i, j)` is an arrow when `S_i ∧ S_j ≠ S_i + S_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverReport<F: Field> {
    pub vertices: Vec<Subspace<F>>,
    pub arrows: Vec<(usize, usize)>,
    /// Connected components of the underlying undirected graph, each sorted.
    pub components: Vec<Vec<usize>>,
}

impl<F: Field> QuiverReport<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.dim()).collect()
    }

    pub fn only_loops_and_isolated(&self) -> bool {
        self.arrows.iter().all(|(a, b)| a == b)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ext_quiver {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  S{i} [label=\"S{i}:dim{}\"];", v.dim());
        }
        for (a, b) in &self.arrows {
            let _ = writeln!(out, "  S{a} -> S{b};");
        }
        out.push_str("}\n");
        out
    }
}

fn components(n: usize, arrows: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in arrows {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = root(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(v);
    }
    groups
}

/// Quiver on the given simple subcoalgebras.
pub fn ext_quiver_on<F: Field>(c: &Coalgebra<F>, simples: Vec<Subspace<F>>) -> Result<QuiverReport<F>> {
    let mut arrows = Vec::new();
    for (i, s) in simples.iter().enumerate() {
        for (j, t) in simples.iter().enumerate() {
            if c.wedge(s, t)? != s.sum(t)? {
                arrows.push((i, j));
            }
        }
    }
    Ok(QuiverReport {
        components: components(simples.len(), &arrows),
        vertices: simples,
        arrows,
    })
}

pub fn ext_quiver<F: Factorable>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<QuiverReport<F>> {
    ext_quiver_on(c, simple_subcoalgebra_split(c, cfg)?)
}

/// One block: the wedge closure of the simples in a quiver component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block<F: Field> {
    /// Indices into the quiver vertices.
    pub simples: Vec<usize>,
    pub subspace: Subspace<F>,
    /// Inclusion of the block, restricted to its RREF basis, into `C`.
    pub embedding: CoalgebraMap<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition<F: Field> {
    pub quiver: QuiverReport<F>,
    pub blocks: Vec<Block<F>>,
    /// Independence and spanning of the blocks.
    pub report: AxiomReport,
}

impl<F: Field> BlockDecomposition<F> {
    pub fn is_coproduct(&self) -> bool {
        self.report.is_valid()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.subspace.dim()).collect()
    }
}

/// Groups simples by quiver component and closes each group under `B ↦ B ∧ T`.
///
/// Each block is checked to be a subcoalgebra (`Δ(B) ⊆ B⊗B`); independence and
/// spanning are recorded in the report.
pub fn block_decomposition<F: Factorable>(c: &Coalgebra<F>, cfg: &AnalysisConfig) -> Result<BlockDecomposition<F>> {
    let f = c.field();
    let quiver = ext_quiver(c, cfg)?;
    let mut blocks = Vec::new();
    for comp in &quiver.components {
        let mut t = Subspace::zero(f, c.dim());
        for &i in comp {
            t = t.sum(&quiver.vertices[i])?;
        }
        let mut b = t.clone();
        loop {
            let next = c.wedge(&b, &t)?.sum(&b)?;
            if next == b {
                break;
            }
            b = next;
        }
        if !c.is_subcoalgebra(&b) {
            return Err(Error::InvalidCoalgebra(format!(
                "wedge closure of component {comp:?} is not a subcoalgebra"
            )));
        }
        let restricted = c.restrict(&b)?;
        let matrix = Matrix::from_columns(f, c.dim(), b.basis_vecs())?;
        blocks.push(Block {
            simples: comp.clone(),
            embedding: CoalgebraMap::new(restricted, c.clone(), matrix),
            subspace: b,
        });
    }
    let mut report = AxiomReport::default();
    let mut total = Subspace::zero(f, c.dim());
    let mut dims = 0;
    for b in &blocks {
        total = total.sum(&b.subspace)?;
        dims += b.subspace.dim();
    }
    if dims != total.dim() {
        report.push("blocks independent", vec![dims, total.dim()]);
    }
    if !total.is_full() {
        report.push("blocks span", vec![total.dim(), c.dim()]);
    }
    Ok(BlockDecomposition { quiver, blocks, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{coproduct, divided_power, golden_example, truncated_path_coalgebra, GoldenExample, QuiverPresentation};
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn divided_power_has_one_loop() {
        let q = Rationals;
        let cfg = AnalysisConfig::default();
        let quiver = ext_quiver(&divided_power(&q, 3), &cfg).unwrap();
        assert_eq!(quiver.vertices, vec![Subspace::coordinate(&q, 4, &[0])]);
        assert_eq!(quiver.arrows, vec![(0, 0)]);
        assert_eq!(quiver.to_dot(), "digraph ext_quiver {\n  S0 [label=\"S0:dim1\"];\n  S0 -> S0;\n}\n");
    }

    #[test]
    fn gaussian_coradical_is_one_simple() {
        let q = Rationals;
        let cfg = AnalysisConfig::default();
        let ex63 = golden_example(&q, GoldenExample::Ex63).unwrap();
        let (sum, _) = coproduct(&[divided_power(&q, 1), ex63]).unwrap();
        let simples = simple_subcoalgebra_split(&sum, &cfg).unwrap();
        assert_eq!(simples.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![1, 2]);
        let blocks = block_decomposition(&sum, &cfg).unwrap();
        assert!(blocks.is_coproduct());
        let mut dims = blocks.dims();
        dims.sort();
        assert_eq!(dims, vec![2, 4]);
        assert!(blocks.blocks.iter().all(|b| b.embedding.verify().is_morphism()));
    }

    #[test]
    fn a2_has_a_proper_arrow() {
        let f3 = PrimeField::new(3).unwrap();
        let cfg = AnalysisConfig::default();
        let c = truncated_path_coalgebra(&f3, &QuiverPresentation::a2(), 1).unwrap();
        let quiver = ext_quiver(&c, &cfg).unwrap();
        assert_eq!(quiver.dims(), vec![1, 1]);
        assert_eq!(quiver.arrows.len(), 1);
        assert!(!quiver.only_loops_and_isolated());
        assert_eq!(quiver.components, vec![vec![0, 1]]);
        let blocks = block_decomposition(&c, &cfg).unwrap();
        assert_eq!(blocks.dims(), vec![3]);
    }

    #[test]
    fn isolated_vertices_give_separate_blocks() {
        let f2 = PrimeField::new(2).unwrap();
        let cfg = AnalysisConfig::default();
        let c = truncated_path_coalgebra(&f2, &QuiverPresentation::isolated(3), 2).unwrap();
        let blocks = block_decomposition(&c, &cfg).unwrap();
        assert_eq!(blocks.quiver.dims(), vec![1, 1, 1]);
        assert!(blocks.quiver.arrows.is_empty());
        assert_eq!(blocks.dims(), vec![1, 1, 1]);
        assert!(blocks.is_coproduct());
    }
}
