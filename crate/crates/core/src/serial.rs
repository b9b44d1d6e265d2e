//! JSON forms of tables, subspaces and witnesses. Scalars are strings in the field's
//! own notation, e.g. `"-3/4"` over Q and `"2 mod 5"` over GF(5).

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::lattice::Witness;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

fn check_field<F: Field>(field: &F, declared: FieldDescriptor) -> Result<()> {
    if field.descriptor() != declared {
        return Err(Error::FieldMismatch(format!(
            "table is over {declared} but the context field is {}",
            field.descriptor()
        )));
    }
    Ok(())
}

fn parse_vec<F: Field>(field: &F, v: &[String]) -> Result<Vec<F::Elem>> {
    v.iter().map(|s| field.parse(s)).collect()
}

fn parse_cube<F: Field>(field: &F, t: &[Vec<Vec<String>>]) -> Result<Vec<Vec<Vec<F::Elem>>>> {
    t.iter()
        .map(|r| r.iter().map(|c| parse_vec(field, c)).collect())
        .collect()
}

/// `mult[i][j][k]` is the coefficient of `e_k` in `e_i·e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub unit: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
}

impl AlgebraJson {
    pub fn from_algebra<F: Field>(a: &Algebra<F>) -> Self {
        let f = a.field();
        AlgebraJson {
            field: f.descriptor(),
            dim: a.dim(),
            unit: a.unit().iter().map(|x| f.format(x)).collect(),
            mult: a.mult_strings(),
        }
    }

    pub fn to_algebra<F: Field>(&self, field: &F) -> Result<Algebra<F>> {
        check_field(field, self.field)?;
        let a = Algebra::new(field, parse_cube(field, &self.mult)?, parse_vec(field, &self.unit)?)?;
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!("declared dim {} but table has {}", self.dim, a.dim())));
        }
        Ok(a)
    }
}

/// `comult[k][i][j]` is the coefficient of `e_i ⊗ e_j` in `Δ(e_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoalgebraJson {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub counit: Vec<String>,
    pub comult: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<Vec<usize>>>,
}

impl CoalgebraJson {
    pub fn from_coalgebra<F: Field>(c: &Coalgebra<F>) -> Self {
        let f = c.field();
        CoalgebraJson {
            field: f.descriptor(),
            dim: c.dim(),
            counit: c.counit().iter().map(|x| f.format(x)).collect(),
            comult: c.comult_strings(),
            grading: c.grading().map(|g| g.to_vec()),
        }
    }

    pub fn to_coalgebra<F: Field>(&self, field: &F) -> Result<Coalgebra<F>> {
        check_field(field, self.field)?;
        let c = Coalgebra::new(field, parse_cube(field, &self.comult)?, parse_vec(field, &self.counit)?)?;
        if c.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!("declared dim {} but table has {}", self.dim, c.dim())));
        }
        match &self.grading {
            Some(g) => c.with_grading(g.clone()),
            None => Ok(c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub ambient: usize,
    /// RREF basis rows.
    pub basis: Vec<Vec<String>>,
}

impl SubspaceJson {
    pub fn from_subspace<F: Field>(s: &Subspace<F>) -> Self {
        SubspaceJson {
            ambient: s.ambient(),
            basis: s.to_strings(),
        }
    }

    pub fn to_subspace<F: Field>(&self, field: &F) -> Result<Subspace<F>> {
        let rows = self.basis.iter().map(|r| parse_vec(field, r)).collect::<Result<_>>()?;
        Subspace::span(field, self.ambient, rows)
    }
}

pub fn matrix_to_json<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
    m.to_strings()
}

pub fn matrix_from_json<F: Field>(field: &F, cols: usize, rows: &[Vec<String>]) -> Result<Matrix<F>> {
    let rows = rows.iter().map(|r| parse_vec(field, r)).collect::<Result<_>>()?;
    Matrix::from_rows(field, cols, rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WitnessJson {
    Triple {
        a: SubspaceJson,
        b: SubspaceJson,
        c: SubspaceJson,
    },
    Stephenson {
        n: SubspaceJson,
        l: SubspaceJson,
        /// Rows of the map `N/(N∩L) → L/(N∩L)` in complement coordinates.
        map: Vec<Vec<String>>,
        map_cols: usize,
    },
}

impl WitnessJson {
    pub fn from_witness<F: Field>(w: &Witness<F>) -> Self {
        match w {
            Witness::Triple { a, b, c } => WitnessJson::Triple {
                a: SubspaceJson::from_subspace(a),
                b: SubspaceJson::from_subspace(b),
                c: SubspaceJson::from_subspace(c),
            },
            Witness::Stephenson { n, l, map } => WitnessJson::Stephenson {
                n: SubspaceJson::from_subspace(n),
                l: SubspaceJson::from_subspace(l),
                map: matrix_to_json(map),
                map_cols: map.cols(),
            },
        }
    }

    pub fn to_witness<F: Field>(&self, field: &F) -> Result<Witness<F>> {
        Ok(match self {
            WitnessJson::Triple { a, b, c } => Witness::Triple {
                a: a.to_subspace(field)?,
                b: b.to_subspace(field)?,
                c: c.to_subspace(field)?,
            },
            WitnessJson::Stephenson { n, l, map, map_cols } => Witness::Stephenson {
                n: n.to_subspace(field)?,
                l: l.to_subspace(field)?,
                map: matrix_from_json(field, *map_cols, map)?,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gaussian_rationals;
    use crate::constructors::{golden_example, GoldenExample};
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn tables_round_trip() {
        let q = Rationals;
        let c = golden_example(&q, GoldenExample::Ex64(2)).unwrap();
        let json = serde_json::to_string(&CoalgebraJson::from_coalgebra(&c)).unwrap();
        let back: CoalgebraJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_coalgebra(&q).unwrap(), c);
        let a = gaussian_rationals(&q);
        let j = AlgebraJson::from_algebra(&a);
        assert_eq!(j.mult[1][1][0], "-1");
        assert_eq!(j.to_algebra(&q).unwrap(), a);
        assert!(j.to_algebra(&PrimeField::new(5).unwrap()).is_err());
    }

    #[test]
    fn prime_field_scalars_carry_the_modulus() {
        let f5 = PrimeField::new(5).unwrap();
        let s = Subspace::span(&f5, 2, vec![vec![f5.from_i64(2), f5.from_i64(4)]]).unwrap();
        let j = SubspaceJson::from_subspace(&s);
        assert_eq!(j.basis, vec![vec!["1 mod 5".to_string(), "2 mod 5".to_string()]]);
        assert_eq!(j.to_subspace(&f5).unwrap(), s);
    }
}
