//! Run files: the JSON input of `coalg-lab run`.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use coalg_core::constructors::QuiverPresentation;
use coalg_core::serial::{AlgebraJson, CoalgebraJson};
use coalg_core::FieldDescriptor;

use crate::error::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSpec {
    pub field: FieldDescriptor,
    #[serde(default)]
    pub budget: Option<u64>,
    #[serde(default)]
    pub degree_cap: Option<usize>,
    pub constructions: Vec<ConstructionSpec>,
    #[serde(default)]
    pub analyses: Vec<AnalysisSpec>,
    #[serde(default)]
    pub outputs: Outputs,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionSpec {
    pub name: String,
    pub kind: String,
    #[serde(default = "empty_params")]
    pub params: Value,
}

fn empty_params() -> Value {
    Value::Object(Default::default())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisSpec {
    pub target: String,
    pub checks: Vec<String>,
    #[serde(default)]
    pub budget: Option<u64>,
    #[serde(default)]
    pub degree_cap: Option<usize>,
    /// Expected outcome of yes/no checks; unlisted checks are expected to hold.
    #[serde(default)]
    pub expect: BTreeMap<String, bool>,
    /// Lattice checks run on the direct sum of this many copies of the regular comodule.
    #[serde(default = "one")]
    pub copies: usize,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Outputs {
    /// Report file name inside the output directory.
    #[serde(default)]
    pub report: Option<String>,
    /// DOT file name per quiver target; defaults to `<target>.dot`.
    #[serde(default)]
    pub quivers: BTreeMap<String, String>,
}

/// A named scalar: either a JSON integer or a string in the field's notation.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn text(&self) -> String {
        match self {
            Scalar::Int(n) => n.to_string(),
            Scalar::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuiverSpec {
    /// `"a2"`, `"loop"`.
    Preset(String),
    Isolated { isolated: usize },
    Explicit(QuiverPresentation),
}

impl QuiverSpec {
    pub fn presentation(&self) -> Result<QuiverPresentation, CliError> {
        match self {
            QuiverSpec::Preset(s) if s == "a2" => Ok(QuiverPresentation::a2()),
            QuiverSpec::Preset(s) if s == "loop" => Ok(QuiverPresentation::loop_quiver()),
            QuiverSpec::Preset(s) => Err(CliError::Invalid(format!("unknown quiver preset {s:?}"))),
            QuiverSpec::Isolated { isolated } => Ok(QuiverPresentation::isolated(*isolated)),
            QuiverSpec::Explicit(q) => {
                q.validate().map_err(|e| CliError::Invalid(e.to_string()))?;
                Ok(q.clone())
            }
        }
    }
}

/// What a construction produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectKind {
    Coalgebra,
    Algebra,
    Automorphism,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Truncation {
    pub n: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parts {
    pub parts: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Pair {
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Twisted {
    pub algebra: String,
    pub automorphism: String,
    pub n: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathParams {
    pub quiver: QuiverSpec,
    pub n: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneralizedPathParams {
    pub quiver: QuiverSpec,
    pub attached: Vec<String>,
    pub n: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenParams {
    pub example: String,
    #[serde(default)]
    pub n: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OfAlgebra {
    pub algebra: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OfCoalgebra {
    pub coalgebra: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraTable {
    pub table: CoalgebraJson,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraTable {
    pub table: AlgebraJson,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoParams {}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialParams {
    /// Coefficients from the constant term upwards.
    pub coefficients: Vec<Scalar>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuaternionParams {
    pub a: i64,
    pub b: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrivialExtensionParams {
    pub algebra: String,
    pub phi: String,
    pub sigma: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixParams {
    pub algebra: String,
    /// Row-major; column `k` is the image of `e_k`.
    pub rows: Vec<Vec<Scalar>>,
}

/// Parsed parameters of one construction.
#[derive(Clone, Debug)]
pub enum Params {
    DividedPower(Truncation),
    Coproduct(Parts),
    TensorCoalgebra(Pair),
    GradedSeriesCoalgebra(Twisted),
    CotensorTruncated(Twisted),
    TruncatedPathCoalgebra(PathParams),
    GeneralizedPathCoalgebra(GeneralizedPathParams),
    GoldenExample(GoldenParams),
    DualCoalgebra(OfAlgebra),
    CoOpposite(OfCoalgebra),
    CoalgebraTable(CoalgebraTable),
    GroundField(NoParams),
    PolynomialQuotient(PolynomialParams),
    GaussianRationals(NoParams),
    Quaternions(QuaternionParams),
    MatrixAlgebra(Truncation),
    DirectProduct(Parts),
    SkewPolynomialQuotient(Twisted),
    TrivialExtension(TrivialExtensionParams),
    ConvolutionDual(OfCoalgebra),
    AlgebraTable(AlgebraTable),
    Identity(OfAlgebra),
    GaussianConjugation(NoParams),
    AutomorphismMatrix(MatrixParams),
}

/// One entry of the construction catalogue.
pub struct KindInfo {
    pub kind: &'static str,
    pub produces: ObjectKind,
    pub params: &'static str,
    pub summary: &'static str,
}

pub const KINDS: &[KindInfo] = &[
    KindInfo {
        kind: "divided_power",
        produces: ObjectKind::Coalgebra,
        params: "{\"n\": N}",
        summary: "Divided power coalgebra truncated at degree N: basis c_0..c_N, Δ(c_n) = Σ c_i ⊗ c_{n-i}.",
    },
    KindInfo {
        kind: "coproduct",
        produces: ObjectKind::Coalgebra,
        params: "{\"parts\": [coalgebra names]}",
        summary: "Direct sum of coalgebras, blocks in the listed order.",
    },
    KindInfo {
        kind: "tensor_coalgebra",
        produces: ObjectKind::Coalgebra,
        params: "{\"left\": coalgebra, \"right\": coalgebra}",
        summary: "Tensor product C ⊗ E with basis ordered (c_i, e_j) lexicographically.",
    },
    KindInfo {
        kind: "graded_series_coalgebra",
        produces: ObjectKind::Coalgebra,
        params: "{\"algebra\": D, \"automorphism\": α, \"n\": N}",
        summary: "Graded dual of the skew power series ring D[[x; α]] truncated at degree N.",
    },
    KindInfo {
        kind: "cotensor_truncated",
        produces: ObjectKind::Coalgebra,
        params: "{\"algebra\": D, \"automorphism\": α, \"n\": N}",
        summary: "Cotensor coalgebra of the dual bicomodule (D_α)* over D*, truncated at degree N.",
    },
    KindInfo {
        kind: "truncated_path_coalgebra",
        produces: ObjectKind::Coalgebra,
        params: "{\"quiver\": \"a2\" | \"loop\" | {\"isolated\": k} | {\"vertices\": [..], \"arrows\": [..]}, \"n\": N}",
        summary: "Path coalgebra spanned by paths of length at most N.",
    },
    KindInfo {
        kind: "generalized_path_coalgebra",
        produces: ObjectKind::Coalgebra,
        params: "{\"quiver\": quiver, \"attached\": [coalgebra per vertex], \"n\": N}",
        summary: "Path coalgebra with a coalgebra attached at every vertex, paths of length at most N.",
    },
    KindInfo {
        kind: "golden_example",
        produces: ObjectKind::Coalgebra,
        params: "{\"example\": \"ex61\" | \"ex63\" | \"ex64\", \"n\": N (ex61, ex64)}",
        summary: "Literal structure tables of the worked examples.",
    },
    KindInfo {
        kind: "dual_coalgebra",
        produces: ObjectKind::Coalgebra,
        params: "{\"algebra\": A}",
        summary: "The coalgebra A* dual to a finite-dimensional algebra.",
    },
    KindInfo {
        kind: "co_opposite",
        produces: ObjectKind::Coalgebra,
        params: "{\"coalgebra\": C}",
        summary: "C with the tensor factors of Δ swapped.",
    },
    KindInfo {
        kind: "coalgebra_table",
        produces: ObjectKind::Coalgebra,
        params: "{\"table\": {\"field\", \"dim\", \"counit\", \"comult\"}}",
        summary: "A coalgebra given by structure constants comult[k][i][j].",
    },
    KindInfo {
        kind: "ground_field",
        produces: ObjectKind::Algebra,
        params: "{}",
        summary: "The one-dimensional algebra k.",
    },
    KindInfo {
        kind: "polynomial_quotient",
        produces: ObjectKind::Algebra,
        params: "{\"coefficients\": [c_0, c_1, ..]}",
        summary: "k[x]/(f) on the basis 1, x, .., x^{deg f - 1}.",
    },
    KindInfo {
        kind: "gaussian_rationals",
        produces: ObjectKind::Algebra,
        params: "{}",
        summary: "k(i) = k[x]/(x² + 1) on the basis 1, i.",
    },
    KindInfo {
        kind: "quaternions",
        produces: ObjectKind::Algebra,
        params: "{\"a\": a, \"b\": b}",
        summary: "Quaternion algebra with i² = a, j² = b, ij = -ji = k.",
    },
    KindInfo {
        kind: "matrix_algebra",
        produces: ObjectKind::Algebra,
        params: "{\"n\": n}",
        summary: "n × n matrices on the matrix units.",
    },
    KindInfo {
        kind: "direct_product",
        produces: ObjectKind::Algebra,
        params: "{\"parts\": [algebra names]}",
        summary: "Product algebra with componentwise multiplication.",
    },
    KindInfo {
        kind: "skew_polynomial_quotient",
        produces: ObjectKind::Algebra,
        params: "{\"algebra\": D, \"automorphism\": α, \"n\": N}",
        summary: "D[x; α]/(x^{N+1}) with x·a = α(a)·x.",
    },
    KindInfo {
        kind: "trivial_extension",
        produces: ObjectKind::Algebra,
        params: "{\"algebra\": D, \"phi\": φ, \"sigma\": σ}",
        summary: "D ∝ D with the bimodule twisted by φ on the left and σ on the right.",
    },
    KindInfo {
        kind: "convolution_dual",
        produces: ObjectKind::Algebra,
        params: "{\"coalgebra\": C}",
        summary: "The convolution algebra C*.",
    },
    KindInfo {
        kind: "algebra_table",
        produces: ObjectKind::Algebra,
        params: "{\"table\": {\"field\", \"dim\", \"unit\", \"mult\"}}",
        summary: "An algebra given by structure constants mult[i][j][k].",
    },
    KindInfo {
        kind: "identity",
        produces: ObjectKind::Automorphism,
        params: "{\"algebra\": D}",
        summary: "The identity automorphism of D.",
    },
    KindInfo {
        kind: "gaussian_conjugation",
        produces: ObjectKind::Automorphism,
        params: "{}",
        summary: "Complex conjugation i ↦ -i on gaussian_rationals.",
    },
    KindInfo {
        kind: "automorphism_matrix",
        produces: ObjectKind::Automorphism,
        params: "{\"algebra\": D, \"rows\": [[..], ..]}",
        summary: "An explicit automorphism of D; column k is the image of e_k.",
    },
];

/// One entry of the analysis catalogue.
pub struct CheckInfo {
    pub check: &'static str,
    pub applies_to: ObjectKind,
    pub summary: &'static str,
}

pub const CHECKS: &[CheckInfo] = &[
    CheckInfo {
        check: "verify",
        applies_to: ObjectKind::Coalgebra,
        summary: "Coassociativity and counit laws.",
    },
    CheckInfo {
        check: "cocommutative",
        applies_to: ObjectKind::Coalgebra,
        summary: "Whether Δ is symmetric.",
    },
    CheckInfo {
        check: "coradical_filtration",
        applies_to: ObjectKind::Coalgebra,
        summary: "Coradical filtration by wedges and by radical annihilators; the two must agree.",
    },
    CheckInfo {
        check: "is_chain",
        applies_to: ObjectKind::Coalgebra,
        summary: "Whether the right coideals form a chain (every Loewy layer simple).",
    },
    CheckInfo {
        check: "chain_type",
        applies_to: ObjectKind::Coalgebra,
        summary: "The division algebra dual to the coradical of a chain coalgebra.",
    },
    CheckInfo {
        check: "ext_quiver",
        applies_to: ObjectKind::Coalgebra,
        summary: "Ext quiver on the simple subcoalgebras; written as DOT.",
    },
    CheckInfo {
        check: "block_decomposition",
        applies_to: ObjectKind::Coalgebra,
        summary: "Splitting into wedge-closed blocks along quiver components.",
    },
    CheckInfo {
        check: "is_distributive",
        applies_to: ObjectKind::Coalgebra,
        summary: "Distributivity of the right coideal lattice, by every applicable method.",
    },
    CheckInfo {
        check: "stephenson",
        applies_to: ObjectKind::Coalgebra,
        summary: "Hom(N/(N∩L), L/(N∩L)) = 0 over all pairs of subcomodules.",
    },
    CheckInfo {
        check: "lattice",
        applies_to: ObjectKind::Coalgebra,
        summary: "Enumerated subcomodule lattice: size, dimensions, chain and distributivity.",
    },
    CheckInfo {
        check: "annihilator_check",
        applies_to: ObjectKind::Coalgebra,
        summary: "Ann turns sums into intersections and intersections into sums, injectively.",
    },
    CheckInfo {
        check: "dual_chain_analysis",
        applies_to: ObjectKind::Coalgebra,
        summary: "Chain ring structure of C* checked against the coradical filtration.",
    },
    CheckInfo {
        check: "verify",
        applies_to: ObjectKind::Algebra,
        summary: "Associativity and unit laws.",
    },
    CheckInfo {
        check: "jacobson_radical",
        applies_to: ObjectKind::Algebra,
        summary: "Radical and its powers.",
    },
    CheckInfo {
        check: "center",
        applies_to: ObjectKind::Algebra,
        summary: "The center as a subspace.",
    },
    CheckInfo {
        check: "is_left_chain_ring",
        applies_to: ObjectKind::Algebra,
        summary: "Whether the left ideals form a chain.",
    },
    CheckInfo {
        check: "division_check",
        applies_to: ObjectKind::Algebra,
        summary: "Whether every nonzero element is invertible.",
    },
    CheckInfo {
        check: "left_ideals",
        applies_to: ObjectKind::Algebra,
        summary: "Enumerated left ideal lattice: size, chain and distributivity.",
    },
    CheckInfo {
        check: "verify",
        applies_to: ObjectKind::Automorphism,
        summary: "Invertibility, unit and multiplicativity.",
    },
];

pub fn kind_info(kind: &str) -> Option<&'static KindInfo> {
    KINDS.iter().find(|k| k.kind == kind)
}

pub fn check_applies(check: &str, target: ObjectKind) -> bool {
    CHECKS.iter().any(|c| c.check == check && c.applies_to == target)
}

fn parse_at<T: DeserializeOwned>(v: &Value, at: &str) -> Result<T, CliError> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let inner = e.path().to_string();
        let path = if inner == "." { at.to_string() } else { format!("{at}.{inner}") };
        CliError::Parse {
            path,
            message: e.into_inner().to_string(),
        }
    })
}

impl Params {
    pub fn parse(kind: &str, v: &Value, at: &str) -> Result<Params, CliError> {
        Ok(match kind {
            "divided_power" => Params::DividedPower(parse_at(v, at)?),
            "coproduct" => Params::Coproduct(parse_at(v, at)?),
            "tensor_coalgebra" => Params::TensorCoalgebra(parse_at(v, at)?),
            "graded_series_coalgebra" => Params::GradedSeriesCoalgebra(parse_at(v, at)?),
            "cotensor_truncated" => Params::CotensorTruncated(parse_at(v, at)?),
            "truncated_path_coalgebra" => Params::TruncatedPathCoalgebra(parse_at(v, at)?),
            "generalized_path_coalgebra" => Params::GeneralizedPathCoalgebra(parse_at(v, at)?),
            "golden_example" => Params::GoldenExample(parse_at(v, at)?),
            "dual_coalgebra" => Params::DualCoalgebra(parse_at(v, at)?),
            "co_opposite" => Params::CoOpposite(parse_at(v, at)?),
            "coalgebra_table" => Params::CoalgebraTable(parse_at(v, at)?),
            "ground_field" => Params::GroundField(parse_at(v, at)?),
            "polynomial_quotient" => Params::PolynomialQuotient(parse_at(v, at)?),
            "gaussian_rationals" => Params::GaussianRationals(parse_at(v, at)?),
            "quaternions" => Params::Quaternions(parse_at(v, at)?),
            "matrix_algebra" => Params::MatrixAlgebra(parse_at(v, at)?),
            "direct_product" => Params::DirectProduct(parse_at(v, at)?),
            "skew_polynomial_quotient" => Params::SkewPolynomialQuotient(parse_at(v, at)?),
            "trivial_extension" => Params::TrivialExtension(parse_at(v, at)?),
            "convolution_dual" => Params::ConvolutionDual(parse_at(v, at)?),
            "algebra_table" => Params::AlgebraTable(parse_at(v, at)?),
            "identity" => Params::Identity(parse_at(v, at)?),
            "gaussian_conjugation" => Params::GaussianConjugation(parse_at(v, at)?),
            "automorphism_matrix" => Params::AutomorphismMatrix(parse_at(v, at)?),
            other => return Err(CliError::UnknownKind(other.to_string())),
        })
    }

    /// Names of other constructions this one reads, with the kind each must have.
    pub fn references(&self) -> Vec<(&str, ObjectKind)> {
        use ObjectKind::*;
        match self {
            Params::Coproduct(p) => p.parts.iter().map(|s| (s.as_str(), Coalgebra)).collect(),
            Params::DirectProduct(p) => p.parts.iter().map(|s| (s.as_str(), Algebra)).collect(),
            Params::TensorCoalgebra(p) => vec![(p.left.as_str(), Coalgebra), (p.right.as_str(), Coalgebra)],
            Params::GradedSeriesCoalgebra(t) | Params::CotensorTruncated(t) | Params::SkewPolynomialQuotient(t) => {
                vec![(t.algebra.as_str(), Algebra), (t.automorphism.as_str(), Automorphism)]
            }
            Params::GeneralizedPathCoalgebra(p) => p.attached.iter().map(|s| (s.as_str(), Coalgebra)).collect(),
            Params::DualCoalgebra(p) | Params::Identity(p) => vec![(p.algebra.as_str(), Algebra)],
            Params::AutomorphismMatrix(p) => vec![(p.algebra.as_str(), Algebra)],
            Params::CoOpposite(p) | Params::ConvolutionDual(p) => vec![(p.coalgebra.as_str(), Coalgebra)],
            Params::TrivialExtension(p) => vec![
                (p.algebra.as_str(), Algebra),
                (p.phi.as_str(), Automorphism),
                (p.sigma.as_str(), Automorphism),
            ],
            _ => Vec::new(),
        }
    }
}

/// A spec that passed parsing and validation, with constructions in dependency order.
#[derive(Clone, Debug)]
pub struct ValidatedSpec {
    pub spec: RunSpec,
    /// `(index into spec.constructions, parsed params)`, dependencies first.
    pub order: Vec<(usize, Params)>,
    pub kinds: BTreeMap<String, ObjectKind>,
}

pub fn parse_spec(text: &str) -> Result<RunSpec, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| CliError::Parse {
        path: e.path().to_string(),
        message: e.into_inner().to_string(),
    })
}

pub fn validate(spec: RunSpec) -> Result<ValidatedSpec, CliError> {
    let mut kinds = BTreeMap::new();
    let mut parsed = Vec::with_capacity(spec.constructions.len());
    for (i, c) in spec.constructions.iter().enumerate() {
        let info = kind_info(&c.kind).ok_or_else(|| CliError::UnknownKind(c.kind.clone()))?;
        if kinds.insert(c.name.clone(), info.produces).is_some() {
            return Err(CliError::Invalid(format!("construction name {:?} is used twice", c.name)));
        }
        parsed.push(Params::parse(&c.kind, &c.params, &format!("constructions[{i}].params"))?);
    }
    for (i, p) in parsed.iter().enumerate() {
        for (name, want) in p.references() {
            match kinds.get(name) {
                None => {
                    return Err(CliError::Invalid(format!(
                        "constructions[{i}] refers to undefined construction {name:?}"
                    )))
                }
                Some(k) if *k != want => {
                    return Err(CliError::Invalid(format!(
                        "constructions[{i}] needs {name:?} to be {want:?}, found {k:?}"
                    )))
                }
                Some(_) => {}
            }
        }
        if let Params::TruncatedPathCoalgebra(PathParams { quiver, .. })
        | Params::GeneralizedPathCoalgebra(GeneralizedPathParams { quiver, .. }) = p
        {
            quiver.presentation()?;
        }
    }
    for (i, a) in spec.analyses.iter().enumerate() {
        let target = kinds
            .get(&a.target)
            .ok_or_else(|| CliError::Invalid(format!("analyses[{i}] targets undefined construction {:?}", a.target)))?;
        for check in &a.checks {
            if !check_applies(check, *target) {
                return Err(CliError::Invalid(format!(
                    "analyses[{i}]: check {check:?} does not apply to {target:?} {:?}",
                    a.target
                )));
            }
        }
        if let Some(k) = a.expect.keys().find(|k| !a.checks.contains(k)) {
            return Err(CliError::Invalid(format!("analyses[{i}].expect names {k:?}, which is not requested")));
        }
        if a.copies == 0 {
            return Err(CliError::Invalid(format!("analyses[{i}].copies must be at least 1")));
        }
    }
    let order = dependency_order(&spec, &parsed)?;
    let mut parsed: Vec<Option<Params>> = parsed.into_iter().map(Some).collect();
    let order = order.into_iter().map(|i| (i, parsed[i].take().expect("each index once"))).collect();
    Ok(ValidatedSpec { spec, order, kinds })
}

/// Kahn's algorithm, always releasing the lowest ready index first.
fn dependency_order(spec: &RunSpec, parsed: &[Params]) -> Result<Vec<usize>, CliError> {
    let index: BTreeMap<&str, usize> = spec
        .constructions
        .iter()
        .enumerate()
        .map(|(i, c)| (c.name.as_str(), i))
        .collect();
    let n = parsed.len();
    let mut pending = vec![0usize; n];
    let mut dependents = vec![Vec::new(); n];
    for (i, p) in parsed.iter().enumerate() {
        let deps: BTreeSet<usize> = p.references().iter().map(|(name, _)| index[name]).collect();
        pending[i] = deps.len();
        for d in deps {
            dependents[d].push(i);
        }
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&i| pending[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(i) = ready.pop_first() {
        order.push(i);
        for &j in &dependents[i] {
            pending[j] -= 1;
            if pending[j] == 0 {
                ready.insert(j);
            }
        }
    }
    if order.len() < n {
        let stuck: Vec<&str> = (0..n)
            .filter(|i| !order.contains(i))
            .map(|i| spec.constructions[i].name.as_str())
            .collect();
        return Err(CliError::Invalid(format!("construction dependencies form a cycle through {stuck:?}")));
    }
    Ok(order)
}
