use std::collections::BTreeMap;

use coalg_core::algebra::{
    direct_product, gaussian_conjugation, gaussian_rationals, ground_field, matrix_algebra, polynomial_quotient,
    quaternions, skew_polynomial_quotient, trivial_extension, verify_automorphism,
};
use coalg_core::constructors::{
    coproduct, cotensor_truncated, divided_power, dual_bicomodule, generalized_path_coalgebra, golden_example,
    graded_series_coalgebra, tensor_coalgebra, truncated_path_coalgebra, GoldenExample,
};
use coalg_core::{Algebra, AnalysisConfig, Coalgebra, Error, Factorable, Field, Matrix, Poly};

use crate::error::CliError;
use crate::spec::{ObjectKind, Params, Scalar, ValidatedSpec};

#[derive(Clone, Debug)]
pub enum Object<F: Field> {
    Coalgebra(Coalgebra<F>),
    Algebra(Algebra<F>),
    /// An automorphism together with the algebra it acts on.
    Automorphism(Algebra<F>, Matrix<F>),
}

impl<F: Field> Object<F> {
    pub fn kind(&self) -> ObjectKind {
        match self {
            Object::Coalgebra(_) => ObjectKind::Coalgebra,
            Object::Algebra(_) => ObjectKind::Algebra,
            Object::Automorphism(..) => ObjectKind::Automorphism,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Object::Coalgebra(c) => c.dim(),
            Object::Algebra(a) => a.dim(),
            Object::Automorphism(a, _) => a.dim(),
        }
    }
}

pub type Store<F> = BTreeMap<String, Object<F>>;

fn coalgebra<'a, F: Field>(store: &'a Store<F>, name: &str) -> &'a Coalgebra<F> {
    match store.get(name) {
        Some(Object::Coalgebra(c)) => c,
        _ => unreachable!("validated reference {name:?}"),
    }
}

fn algebra<'a, F: Field>(store: &'a Store<F>, name: &str) -> &'a Algebra<F> {
    match store.get(name) {
        Some(Object::Algebra(a)) => a,
        _ => unreachable!("validated reference {name:?}"),
    }
}

fn automorphism<'a, F: Field>(store: &'a Store<F>, name: &str) -> (&'a Algebra<F>, &'a Matrix<F>) {
    match store.get(name) {
        Some(Object::Automorphism(a, m)) => (a, m),
        _ => unreachable!("validated reference {name:?}"),
    }
}

fn twist<'a, F: Field>(store: &'a Store<F>, d: &str, alpha: &str) -> Result<(&'a Algebra<F>, &'a Matrix<F>), Error> {
    let d = algebra(store, d);
    let (base, m) = automorphism(store, alpha);
    if base.dim() != d.dim() {
        return Err(Error::InvalidAutomorphism(format!(
            "{alpha:?} acts on a {}-dimensional algebra, not on {}",
            base.dim(),
            d.dim()
        )));
    }
    Ok((d, m))
}

fn scalars<F: Field>(field: &F, v: &[Scalar]) -> Result<Vec<F::Elem>, Error> {
    v.iter().map(|s| field.parse(&s.text())).collect()
}

fn construct<F: Factorable>(
    field: &F,
    params: &Params,
    store: &Store<F>,
    cfg: &AnalysisConfig,
) -> Result<Object<F>, Error> {
    use Object::{Algebra as A, Automorphism as T, Coalgebra as C};
    Ok(match params {
        Params::DividedPower(p) => C(divided_power(field, p.n)),
        Params::Coproduct(p) => {
            let parts: Vec<_> = p.parts.iter().map(|n| coalgebra(store, n).clone()).collect();
            C(coproduct(&parts)?.0)
        }
        Params::TensorCoalgebra(p) => C(tensor_coalgebra(coalgebra(store, &p.left), coalgebra(store, &p.right))?),
        Params::GradedSeriesCoalgebra(t) => {
            let (d, alpha) = twist(store, &t.algebra, &t.automorphism)?;
            C(graded_series_coalgebra(d, alpha, t.n)?)
        }
        Params::CotensorTruncated(t) => {
            let (d, alpha) = twist(store, &t.algebra, &t.automorphism)?;
            let m = dual_bicomodule(d, alpha)?;
            C(cotensor_truncated(&d.dual_coalgebra(), &m, t.n, cfg)?)
        }
        Params::TruncatedPathCoalgebra(p) => {
            let q = p.quiver.presentation().map_err(|e| Error::Parse(e.to_string()))?;
            C(truncated_path_coalgebra(field, &q, p.n)?)
        }
        Params::GeneralizedPathCoalgebra(p) => {
            let q = p.quiver.presentation().map_err(|e| Error::Parse(e.to_string()))?;
            let attached: Vec<_> = p.attached.iter().map(|n| coalgebra(store, n).clone()).collect();
            C(generalized_path_coalgebra(&q, &attached, p.n)?)
        }
        Params::GoldenExample(g) => C(golden_example(field, GoldenExample::from_name(&g.example, g.n)?)?),
        Params::DualCoalgebra(p) => C(algebra(store, &p.algebra).dual_coalgebra()),
        Params::CoOpposite(p) => C(coalgebra(store, &p.coalgebra).co_opposite()),
        Params::CoalgebraTable(t) => C(t.table.to_coalgebra(field)?),
        Params::GroundField(_) => A(ground_field(field)),
        Params::PolynomialQuotient(p) => A(polynomial_quotient(field, &Poly::new(field, scalars(field, &p.coefficients)?))?),
        Params::GaussianRationals(_) => A(gaussian_rationals(field)),
        Params::Quaternions(p) => A(quaternions(field, p.a, p.b)),
        Params::MatrixAlgebra(p) => A(matrix_algebra(field, p.n)),
        Params::DirectProduct(p) => {
            let parts: Vec<_> = p.parts.iter().map(|n| algebra(store, n).clone()).collect();
            A(direct_product(&parts)?)
        }
        Params::SkewPolynomialQuotient(t) => {
            let (d, alpha) = twist(store, &t.algebra, &t.automorphism)?;
            A(skew_polynomial_quotient(d, alpha, t.n)?)
        }
        Params::TrivialExtension(p) => {
            let (d, phi) = twist(store, &p.algebra, &p.phi)?;
            let (_, sigma) = twist(store, &p.algebra, &p.sigma)?;
            A(trivial_extension(d, phi, sigma)?)
        }
        Params::ConvolutionDual(p) => A(coalgebra(store, &p.coalgebra).convolution_dual()),
        Params::AlgebraTable(t) => A(t.table.to_algebra(field)?),
        Params::Identity(p) => {
            let d = algebra(store, &p.algebra);
            T(d.clone(), Matrix::identity(field, d.dim()))
        }
        Params::GaussianConjugation(_) => T(gaussian_rationals(field), gaussian_conjugation(field)),
        Params::AutomorphismMatrix(p) => {
            let d = algebra(store, &p.algebra);
            let rows = p.rows.iter().map(|r| scalars(field, r)).collect::<Result<Vec<_>, _>>()?;
            let m = Matrix::from_rows(field, d.dim(), rows)?;
            let report = verify_automorphism(d, &m);
            if !report.is_valid() {
                return Err(Error::InvalidAutomorphism(report.summary()));
            }
            T(d.clone(), m)
        }
    })
}

/// Builds every construction in dependency order.
pub fn build_all<F: Factorable>(field: &F, spec: &ValidatedSpec, cfg: &AnalysisConfig) -> Result<Store<F>, CliError> {
    let mut store = Store::new();
    for (i, params) in &spec.order {
        let name = &spec.spec.constructions[*i].name;
        let obj = construct(field, params, &store, cfg).map_err(|source| CliError::Construction {
            name: name.clone(),
            source,
        })?;
        store.insert(name.clone(), obj);
    }
    Ok(store)
}
