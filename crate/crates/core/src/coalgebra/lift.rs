//! Lifting a degree-zero isomorphism of graded coalgebras degree by degree.

use super::{CoalgebraMap, Coalgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{kron_apply_left, kron_apply_right, Matrix};
use crate::subspace::Subspace;

/// Candidate solutions tried per degree before backtracking.
const CANDIDATES_PER_DEGREE: usize = 24;

struct Lifter<'a, F: Field> {
    source: &'a Coalgebra<F>,
    target: &'a Coalgebra<F>,
    src_blocks: &'a [Vec<usize>],
    tgt_blocks: &'a [Vec<usize>],
}

impl<F: Field> Lifter<'_, F> {
    fn field(&self) -> &F {
        self.source.field()
    }

    /// Writes the block `x` (target block `deg` by source block `deg`) into `theta`.
    fn place(&self, theta: &mut Matrix<F>, deg: usize, x: &[F::Elem]) {
        let cols = self.src_blocks[deg].len();
        for (p, &row) in self.tgt_blocks[deg].iter().enumerate() {
            for (q, &col) in self.src_blocks[deg].iter().enumerate() {
                theta.set(row, col, x[p * cols + q].clone());
            }
        }
    }

    /// Morphism defect on the source basis vectors of degree `deg`.
    fn defect(&self, theta: &Matrix<F>, deg: usize) -> Vec<F::Elem> {
        let f = self.field();
        let (s, t) = (self.source, self.target);
        let mut out = Vec::new();
        for &k in &self.src_blocks[deg] {
            let image = theta.column(k);
            let lhs = t.delta(&image);
            let ds = s.comult_matrix().column(k);
            let rhs = kron_apply_left(theta, &kron_apply_right(theta, &ds, s.dim()), t.dim());
            out.extend(lhs.iter().zip(&rhs).map(|(a, b)| f.sub(a, b)));
            out.push(f.sub(&t.counit_of(&image), &s.counit()[k]));
        }
        out
    }

    /// Invertible solutions of the affine system imposed on the degree `deg` block.
    fn solutions(&self, theta: &Matrix<F>, deg: usize) -> Vec<Vec<F::Elem>> {
        let f = self.field();
        let (rows, cols) = (self.tgt_blocks[deg].len(), self.src_blocks[deg].len());
        let unknowns = rows * cols;
        let mut base = theta.clone();
        self.place(&mut base, deg, &vec![f.zero(); unknowns]);
        let d0 = self.defect(&base, deg);
        let mut columns = Vec::with_capacity(unknowns);
        for u in 0..unknowns {
            let mut probe = base.clone();
            let mut x = vec![f.zero(); unknowns];
            x[u] = f.one();
            self.place(&mut probe, deg, &x);
            let du = self.defect(&probe, deg);
            columns.push(du.iter().zip(&d0).map(|(a, b)| f.sub(a, b)).collect());
        }
        let system = Matrix::from_columns(f, d0.len(), columns).unwrap();
        let rhs: Vec<F::Elem> = d0.iter().map(|x| f.neg(x)).collect();
        let (x0, kernel) = match system.solve(&rhs) {
            Ok(Some(sol)) => sol,
            _ => return Vec::new(),
        };
        kernel_combinations(f, &x0, &kernel)
            .filter(|x| Matrix::from_flat(f, rows, cols, x.clone()).unwrap().is_invertible())
            .take(CANDIDATES_PER_DEGREE)
            .collect()
    }

    fn extend(&self, theta: Matrix<F>, deg: usize) -> Option<Matrix<F>> {
        if deg == self.src_blocks.len() {
            return Some(theta);
        }
        for x in self.solutions(&theta, deg) {
            let mut next = theta.clone();
            self.place(&mut next, deg, &x);
            if let Some(full) = self.extend(next, deg + 1) {
                return Some(full);
            }
        }
        None
    }
}

/// `x0 + Σ c_i k_i` for small coefficient tuples, starting with `x0` itself.
fn kernel_combinations<'a, F: Field>(
    f: &'a F,
    x0: &'a [F::Elem],
    kernel: &'a Subspace<F>,
) -> impl Iterator<Item = Vec<F::Elem>> + 'a {
    let mut values: Vec<F::Elem> = Vec::new();
    for v in [0, 1, -1, 2, -2, 3] {
        let e = f.from_i64(v);
        if !values.contains(&e) {
            values.push(e);
        }
    }
    let basis = kernel.basis_vecs();
    let r = basis.len() as u32;
    let total = (values.len() as u64).saturating_pow(r).min(4096);
    (0..total).map(move |mut idx| {
        let mut x = x0.to_vec();
        for b in &basis {
            let c = &values[(idx % values.len() as u64) as usize];
            idx /= values.len() as u64;
            if !f.is_zero(c) {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi = f.add(xi, &f.mul(c, bi));
                }
            }
        }
        x
    })
}

/// Extends a degree-zero isomorphism `seed: C(0) → D(0)` to a graded coalgebra isomorphism.
///
/// Seeds are matrices in the coordinates of the degree-zero blocks. Each degree is solved
/// as an affine system in the new block; invertible solutions are tried in order with
/// backtracking. Returns the first full isomorphism, or `None`.
pub fn graded_iso_lift<F: Field>(
    source: &Coalgebra<F>,
    target: &Coalgebra<F>,
    seeds: &[Matrix<F>],
) -> Result<Option<CoalgebraMap<F>>> {
    let (Some(src_blocks), Some(tgt_blocks)) = (source.grading(), target.grading()) else {
        return Err(Error::NotGraded("graded_iso_lift needs grading metadata on both coalgebras".into()));
    };
    super::require_valid(source)?;
    super::require_valid(target)?;
    let sizes = |b: &[Vec<usize>]| b.iter().map(|x| x.len()).collect::<Vec<_>>();
    if sizes(src_blocks) != sizes(tgt_blocks) {
        return Ok(None);
    }
    let lifter = Lifter {
        source,
        target,
        src_blocks,
        tgt_blocks,
    };
    let f = source.field();
    for seed in seeds {
        let (r, c) = (tgt_blocks[0].len(), src_blocks[0].len());
        if seed.rows() != r || seed.cols() != c || !seed.is_invertible() {
            continue;
        }
        let mut theta = Matrix::zeros(f, target.dim(), source.dim());
        lifter.place(&mut theta, 0, seed.data());
        if lifter.defect(&theta, 0).iter().any(|x| !f.is_zero(x)) {
            continue;
        }
        if let Some(full) = lifter.extend(theta, 1) {
            let map = CoalgebraMap::new(source.clone(), target.clone(), full);
            if map.verify().is_iso {
                return Ok(Some(map));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{divided_power, golden_example, GoldenExample};
    use crate::field::Rationals;

    #[test]
    fn identity_lifts_and_mismatches_are_absent() {
        let q = Rationals;
        let dc = divided_power(&q, 3);
        let map = graded_iso_lift(&dc, &dc, &[Matrix::identity(&q, 1)]).unwrap().unwrap();
        assert!(map.verify().is_iso);
        let dc2 = divided_power(&q, 2);
        let ex63 = golden_example(&q, GoldenExample::Ex63).unwrap();
        assert!(graded_iso_lift(&dc2, &ex63, &[Matrix::identity(&q, 1)]).unwrap().is_none());
        assert!(graded_iso_lift(&dc.without_grading(), &dc, &[]).is_err());
    }
}
