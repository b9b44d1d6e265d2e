//! Runs the requested checks on built objects and turns the results into report entries.

use serde::Serialize;
use serde_json::{json, Value};

use coalg_core::algebra::{division_check, is_left_chain_ring, verify_automorphism};
use coalg_core::coalgebra::{filtration_by_annihilators, filtration_by_wedges, Filtration};
use coalg_core::lattice::{
    annihilator_check, block_decomposition, chain_type, dual_chain_analysis, enumerate_left_ideals,
    enumerate_subcomodules, ext_quiver, is_chain_coalgebra, is_distributive_coalgebra, lattice_properties,
    stephenson_check, ChainVerdict, QuiverReport, Witness,
};
use coalg_core::serial::{AlgebraJson, SubspaceJson, WitnessJson};
use coalg_core::{
    Algebra, AnalysisConfig, AxiomReport, Coalgebra, Comodule, Error, Factorable, Field, Subspace, Verdict,
};

use crate::build::Object;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Degraded,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub target: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    /// Some method or enumeration was skipped, so the answer rests on fewer routes.
    pub partial: bool,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_revalidated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    pub dot: Option<String>,
}

/// A cross-check between two analyses of the same target.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantResult {
    pub name: String,
    pub target: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

fn sub_json<F: Field>(s: &Subspace<F>) -> Value {
    serde_json::to_value(SubspaceJson::from_subspace(s)).expect("subspaces serialize")
}

fn elems<F: Field>(f: &F, v: &[F::Elem]) -> Vec<String> {
    v.iter().map(|x| f.format(x)).collect()
}

fn filtration_json<F: Field>(fl: &Filtration<F>) -> Value {
    json!({
        "dims": fl.dims(),
        "terms": fl.terms.iter().map(sub_json).collect::<Vec<_>>(),
    })
}

fn quiver_json<F: Field>(q: &QuiverReport<F>) -> Value {
    json!({
        "vertex_dims": q.dims(),
        "vertices": q.vertices.iter().map(sub_json).collect::<Vec<_>>(),
        "arrows": q.arrows,
        "components": q.components,
        "only_loops_and_isolated": q.only_loops_and_isolated(),
        "dot": q.to_dot(),
    })
}

fn axiom_json(r: &AxiomReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

/// Serializes a witness and reads it back, as a consumer of the report would.
fn round_trip(w: &Value) -> Option<Value> {
    serde_json::from_str(&serde_json::to_string(w).ok()?).ok()
}

struct Outcome {
    status: Status,
    verdict: Option<Verdict>,
    expected: Option<bool>,
    partial: bool,
    result: Value,
    witness: Option<Value>,
    revalidated: Option<bool>,
    note: Option<String>,
    dot: Option<String>,
}

impl Outcome {
    fn info(result: Value) -> Self {
        Outcome {
            status: Status::Pass,
            verdict: None,
            expected: None,
            partial: false,
            result,
            witness: None,
            revalidated: None,
            note: None,
            dot: None,
        }
    }

    /// A yes/no check, failing when the verdict contradicts the expectation.
    fn decide(verdict: Verdict, expected: bool, result: Value) -> Self {
        let status = match verdict {
            Verdict::Unknown => Status::Degraded,
            v if v.is_yes() == expected => Status::Pass,
            _ => Status::Fail,
        };
        Outcome {
            status,
            verdict: Some(verdict),
            expected: Some(expected),
            ..Outcome::info(result)
        }
    }

    fn degraded(e: &Error) -> Self {
        Outcome {
            status: Status::Degraded,
            partial: true,
            note: Some(e.to_string()),
            ..Outcome::info(Value::Null)
        }
    }

    fn failed(verdict: Option<Verdict>, expected: Option<bool>, witness: Value, revalidated: bool, note: String) -> Self {
        Outcome {
            status: Status::Fail,
            verdict,
            expected,
            witness: Some(witness),
            revalidated: Some(revalidated),
            note: Some(note),
            ..Outcome::info(Value::Null)
        }
    }

    fn with_witness(mut self, witness: Value, revalidated: bool) -> Self {
        self.witness = Some(witness);
        self.revalidated = Some(revalidated);
        self
    }

    fn failing(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Checks on one target, sharing the expensive intermediate results.
pub struct Analyzer<'a> {
    pub name: &'a str,
    pub cfg: AnalysisConfig,
    pub copies: usize,
    pub expect: &'a std::collections::BTreeMap<String, bool>,
}

impl Analyzer<'_> {
    fn expected(&self, check: &str) -> bool {
        self.expect.get(check).copied().unwrap_or(true)
    }

    fn finish(&self, check: &str, o: Outcome) -> CheckResult {
        CheckResult {
            target: self.name.to_string(),
            check: check.to_string(),
            status: o.status,
            verdict: o.verdict,
            expected: o.expected,
            partial: o.partial || o.status == Status::Degraded,
            result: o.result,
            witness: o.witness,
            witness_revalidated: o.revalidated,
            note: o.note,
            dot: o.dot,
        }
    }

    pub fn run<F: Factorable>(&self, obj: &Object<F>, checks: &[String]) -> (Vec<CheckResult>, Vec<InvariantResult>) {
        let mut results = Vec::with_capacity(checks.len());
        let mut invariants = Vec::new();
        match obj {
            Object::Coalgebra(c) => {
                let axioms = c.verify();
                let mut distributive = None;
                let mut quiver = None;
                for check in checks {
                    let o = if check != "verify" && !axioms.is_valid() {
                        invalid_input(&axioms, || c.verify())
                    } else {
                        self.coalgebra_check(c, check, &mut distributive, &mut quiver)
                    };
                    results.push(self.finish(check, o));
                }
                if let (Some(v), Some(q)) = (distributive, quiver.as_ref()) {
                    if v == Verdict::Yes {
                        invariants.push(loops_only(self.name, q));
                    }
                }
            }
            Object::Algebra(a) => {
                let axioms = a.verify();
                for check in checks {
                    let o = if check != "verify" && !axioms.is_valid() {
                        invalid_input(&axioms, || a.verify())
                    } else {
                        self.algebra_check(a, check)
                    };
                    results.push(self.finish(check, o));
                }
            }
            Object::Automorphism(d, m) => {
                for check in checks {
                    let r = verify_automorphism(d, m);
                    let o = axiom_outcome(&r, || verify_automorphism(d, m));
                    results.push(self.finish(check, o));
                }
            }
        }
        (results, invariants)
    }

    fn target_comodule<F: Factorable>(&self, c: &Coalgebra<F>) -> Result<Comodule<F>, Error> {
        let regular = c.regular_comodule();
        let mut m = regular.clone();
        for _ in 1..self.copies {
            m = m.direct_sum(&regular)?;
        }
        Ok(m)
    }

    fn coalgebra_check<F: Factorable>(
        &self,
        c: &Coalgebra<F>,
        check: &str,
        distributive: &mut Option<Verdict>,
        quiver: &mut Option<QuiverReport<F>>,
    ) -> Outcome {
        let cfg = &self.cfg;
        let expected = self.expected(check);
        let mut attempt = || -> Result<Outcome, Error> {
            Ok(match check {
                "verify" => axiom_outcome(&c.verify(), || c.verify()),
                "cocommutative" => Outcome::decide(
                    Verdict::from_bool(c.is_cocommutative()),
                    expected,
                    json!({ "cocommutative": c.is_cocommutative() }),
                ),
                "coradical_filtration" => {
                    let wedges = filtration_by_wedges(c, cfg)?;
                    let annihilators = filtration_by_annihilators(c, cfg)?;
                    let agree = wedges == annihilators;
                    let mut o = Outcome::decide(
                        Verdict::from_bool(agree),
                        true,
                        json!({ "dims": wedges.dims(), "methods_agree": agree }),
                    );
                    if !agree {
                        let w = json!({
                            "kind": "filtration_mismatch",
                            "wedges": filtration_json(&wedges),
                            "annihilators": filtration_json(&annihilators),
                        });
                        let again = filtration_by_wedges(c, cfg)? != filtration_by_annihilators(c, cfg)?;
                        o = o.with_witness(w, again);
                    }
                    o
                }
                "is_chain" => {
                    let v = is_chain_coalgebra(c, cfg)?;
                    let mut o = Outcome::decide(v.verdict, expected, chain_json(&v));
                    if o.failing() || v.verdict == Verdict::No {
                        let (w, ok) = if v.verdict == Verdict::No {
                            layer_witness(c, &v, cfg)?
                        } else {
                            certificate_witness(&chain_json(&v), || Ok(is_chain_coalgebra(c, cfg)?.verdict))
                        };
                        o = o.with_witness(w, ok);
                    }
                    o
                }
                "chain_type" => match chain_or_witness(c, cfg)? {
                    Err(o) => o,
                    Ok(_) => {
                        let ty = chain_type(c, cfg)?;
                        let f = ty.algebra.field();
                        Outcome::decide(
                            ty.division.verdict,
                            true,
                            json!({
                                "dim": ty.algebra.dim(),
                                "commutative": ty.algebra.is_commutative(),
                                "algebra": serde_json::to_value(AlgebraJson::from_algebra(&ty.algebra)).expect("tables serialize"),
                                "division": ty.division.verdict,
                                "certainty": ty.division.certainty,
                                "primitive_element": ty.division.primitive_element.as_ref().map(|p| elems(f, p)),
                            }),
                        )
                    }
                },
                "ext_quiver" => {
                    let q = ext_quiver(c, cfg)?;
                    let mut o = Outcome::info(quiver_json(&q));
                    o.dot = Some(q.to_dot());
                    *quiver = Some(q);
                    o
                }
                "block_decomposition" => {
                    let b = block_decomposition(c, cfg)?;
                    let blocks: Vec<Value> = b
                        .blocks
                        .iter()
                        .map(|bl| json!({ "simples": bl.simples, "subspace": sub_json(&bl.subspace) }))
                        .collect();
                    let mut o = Outcome::decide(
                        Verdict::from_bool(b.is_coproduct()),
                        true,
                        json!({ "dims": b.dims(), "blocks": blocks, "components": b.quiver.components }),
                    );
                    if o.failing() {
                        let again = !block_decomposition(c, cfg)?.is_coproduct();
                        o = o.with_witness(json!({ "kind": "block_report", "report": axiom_json(&b.report) }), again);
                    }
                    if quiver.is_none() {
                        *quiver = Some(b.quiver);
                    }
                    o
                }
                "is_distributive" if self.copies == 1 => {
                    let v = is_distributive_coalgebra(c, cfg)?;
                    *distributive = Some(v.verdict);
                    let methods: Vec<Value> = v
                        .methods
                        .iter()
                        .map(|m| json!({ "method": m.method, "verdict": m.verdict, "note": m.note }))
                        .collect();
                    let mut o = Outcome::decide(v.verdict, expected, json!({ "methods": methods }));
                    o.partial = v.degraded;
                    if o.failing() || v.verdict == Verdict::No {
                        let m = c.regular_comodule();
                        let (w, ok) = if v.verdict == Verdict::No {
                            witness_list(&v.witnesses, &m)
                        } else {
                            certificate_witness(&methods, || Ok(is_distributive_coalgebra(c, cfg)?.verdict))
                        };
                        o = o.with_witness(w, ok);
                    }
                    o
                }
                "is_distributive" | "stephenson" => {
                    let m = self.target_comodule(c)?;
                    let st = stephenson_check(&m, cfg)?;
                    let mut o = Outcome::decide(
                        Verdict::from_bool(st.passes),
                        expected,
                        json!({
                            "copies": self.copies,
                            "members": st.members,
                            "pairs_checked": st.pairs_checked,
                        }),
                    );
                    if o.failing() || !st.passes {
                        let (w, ok) = match &st.witness {
                            Some(w) => witness_list(std::slice::from_ref(w), &m),
                            None => certificate_witness(&json!({ "pairs_checked": st.pairs_checked }), || {
                                Ok(Verdict::from_bool(stephenson_check(&m, cfg)?.passes))
                            }),
                        };
                        o = o.with_witness(w, ok);
                    }
                    o
                }
                "lattice" => {
                    let m = self.target_comodule(c)?;
                    let l = enumerate_subcomodules(&m, cfg)?;
                    let p = lattice_properties(&l)?;
                    let mut dims = l.dims();
                    dims.sort_unstable();
                    Outcome::info(json!({
                        "copies": self.copies,
                        "members": l.len(),
                        "dims": dims,
                        "is_chain": p.is_chain,
                        "is_distributive": p.is_distributive,
                        "incomparable": p.incomparable,
                        "failing_triple": p.failing_triple.map(|(a, b, cc)| json!({
                            "indices": [a, b, cc],
                            "a": sub_json(&l.members[a]),
                            "b": sub_json(&l.members[b]),
                            "c": sub_json(&l.members[cc]),
                        })),
                    }))
                }
                "annihilator_check" => {
                    let r = annihilator_check(c, cfg)?;
                    let mut o = Outcome::decide(
                        Verdict::from_bool(r.passes()),
                        true,
                        json!({
                            "mode": r.mode,
                            "members": r.members,
                            "pairs_checked": r.pairs_checked,
                            "injective": r.injective,
                        }),
                    );
                    if o.failing() {
                        let again = !annihilator_check(c, cfg)?.passes();
                        o = o.with_witness(
                            json!({
                                "kind": "annihilator_failures",
                                "join_failures": r.join_failures,
                                "meet_failures": r.meet_failures,
                                "injective": r.injective,
                            }),
                            again,
                        );
                    }
                    o
                }
                "dual_chain_analysis" => match chain_or_witness(c, cfg)? {
                    Err(o) => o,
                    Ok(_) => {
                        let r = dual_chain_analysis(c, cfg)?;
                        let f = r.dual.field();
                        let mut o = Outcome::decide(
                            Verdict::from_bool(r.passes()),
                            true,
                            json!({
                                "is_local": r.is_local,
                                "generator": r.generator.as_ref().map(|t| elems(f, t)),
                                "radical_dims": r.radical_dims,
                                "powers_principal": r.powers_principal,
                                "perp_matches": r.perp_matches,
                                "samples": r.samples,
                                "decomposed": r.decomposed,
                                "domain_property": r.domain_property,
                            }),
                        );
                        if o.failing() {
                            let again = !dual_chain_analysis(c, cfg)?.passes();
                            o = o.with_witness(
                                json!({
                                    "kind": "dual_chain",
                                    "is_local": r.is_local,
                                    "powers_principal": r.powers_principal,
                                    "perp_matches": r.perp_matches,
                                    "decomposed": r.decomposed,
                                }),
                                again,
                            );
                        }
                        o
                    }
                },
                other => unreachable!("validated check {other:?}"),
            })
        };
        attempt().unwrap_or_else(|e| error_outcome(&e))
    }

    fn algebra_check<F: Factorable>(&self, a: &Algebra<F>, check: &str) -> Outcome {
        let cfg = &self.cfg;
        let expected = self.expected(check);
        let f = a.field();
        let attempt = || -> Result<Outcome, Error> {
            Ok(match check {
                "verify" => axiom_outcome(&a.verify(), || a.verify()),
                "jacobson_radical" => {
                    let j = a.radical_with_fallback(cfg)?;
                    let powers = a.ideal_powers(&j);
                    Outcome::info(json!({
                        "dim": j.dim(),
                        "radical": sub_json(&j),
                        "power_dims": powers.iter().map(|p| p.dim()).collect::<Vec<_>>(),
                    }))
                }
                "center" => {
                    let z = a.center();
                    Outcome::info(json!({ "dim": z.dim(), "center": sub_json(&z), "commutative": a.is_commutative() }))
                }
                "is_left_chain_ring" => {
                    let cert = is_left_chain_ring(a, cfg)?;
                    let mut o = Outcome::decide(
                        Verdict::from_bool(cert.is_chain),
                        expected,
                        json!({
                            "radical_dims": cert.radical_powers.iter().map(|p| p.dim()).collect::<Vec<_>>(),
                            "generator": cert.generator.as_ref().map(|t| elems(f, t)),
                            "residue_division": cert.residue.verdict,
                        }),
                    );
                    if o.failing() {
                        let again = is_left_chain_ring(a, cfg)?.is_chain == cert.is_chain;
                        o = o.with_witness(
                            json!({ "kind": "chain_ring", "is_chain": cert.is_chain, "reason": cert.reason }),
                            again,
                        );
                    }
                    o
                }
                "division_check" => {
                    let d = division_check(a, cfg)?;
                    let mut o = Outcome::decide(
                        d.verdict,
                        expected,
                        json!({
                            "certainty": d.certainty,
                            "primitive_element": d.primitive_element.as_ref().map(|p| elems(f, p)),
                            "note": d.note,
                        }),
                    );
                    if o.failing() {
                        o = match &d.zero_divisors {
                            Some((x, y)) => {
                                let w = json!({ "kind": "zero_divisors", "x": elems(f, x), "y": elems(f, y) });
                                let ok = revalidate_zero_divisors(a, &w);
                                o.with_witness(w, ok)
                            }
                            None => {
                                let again = division_check(a, cfg)?.verdict == d.verdict;
                                o.with_witness(json!({ "kind": "division", "note": d.note }), again)
                            }
                        };
                    }
                    o
                }
                "left_ideals" => {
                    let l = enumerate_left_ideals(a, cfg)?;
                    let p = lattice_properties(&l)?;
                    let mut dims = l.dims();
                    dims.sort_unstable();
                    Outcome::info(json!({
                        "members": l.len(),
                        "dims": dims,
                        "is_chain": p.is_chain,
                        "is_distributive": p.is_distributive,
                        "failing_triple": p.failing_triple,
                    }))
                }
                other => unreachable!("validated check {other:?}"),
            })
        };
        attempt().unwrap_or_else(|e| error_outcome(&e))
    }
}

fn error_outcome(e: &Error) -> Outcome {
    match e {
        Error::MethodDisagreement(msg) => Outcome::failed(
            None,
            None,
            json!({ "kind": "method_disagreement", "detail": msg }),
            true,
            e.to_string(),
        ),
        e if e.is_degradation() => Outcome::degraded(e),
        // not applicable here, e.g. enumeration over Q
        e => Outcome::degraded(e),
    }
}

fn axiom_outcome(r: &AxiomReport, recheck: impl Fn() -> AxiomReport) -> Outcome {
    let mut o = Outcome::decide(Verdict::from_bool(r.is_valid()), true, json!({ "valid": r.is_valid() }));
    if o.failing() {
        let w = json!({ "kind": "axiom_violations", "report": axiom_json(r) });
        let ok = round_trip(&w)
            .and_then(|v| serde_json::from_value::<AxiomReport>(v["report"].clone()).ok())
            .map(|back| {
                let fresh = recheck();
                !back.is_valid() && back.violations.iter().all(|v| fresh.violations.contains(v))
            })
            .unwrap_or(false);
        o = o.with_witness(w, ok);
    }
    o
}

fn invalid_input(r: &AxiomReport, recheck: impl Fn() -> AxiomReport) -> Outcome {
    let mut o = axiom_outcome(r, recheck);
    o.verdict = None;
    o.expected = None;
    o.note = Some("input fails its axioms".into());
    o
}

fn chain_json<F: Field>(v: &ChainVerdict<F>) -> Value {
    json!({
        "filtration_dims": v.filtration.dims(),
        "layers": v.layers.iter().map(|l| json!({
            "verdict": l.verdict,
            "certainty": l.certainty,
            "note": l.note,
        })).collect::<Vec<_>>(),
        "failing_layer": v.failing_layer,
        "enumerated_total_order": v.enumerated,
    })
}

/// `C_n / C_{n-1}` as a comodule, from the two filtration terms.
fn layer<F: Field>(c: &Coalgebra<F>, upper: &Subspace<F>, lower: &Subspace<F>) -> Result<Comodule<F>, Error> {
    let f = c.field();
    let m = c.regular_comodule();
    let restricted = m.restrict(upper)?;
    let coords = lower
        .basis_vecs()
        .iter()
        .map(|v| upper.coordinates(v).ok_or_else(|| Error::DimensionMismatch("lower term not inside upper".into())))
        .collect::<Result<Vec<_>, _>>()?;
    restricted.quotient(&Subspace::span(f, upper.dim(), coords)?)
}

/// The first non-simple Loewy layer, serialized and rechecked from its JSON form.
fn layer_witness<F: Factorable>(
    c: &Coalgebra<F>,
    v: &ChainVerdict<F>,
    cfg: &AnalysisConfig,
) -> Result<(Value, bool), Error> {
    let f = c.field();
    let n = v.failing_layer.unwrap_or(0);
    let upper = &v.filtration.terms[n];
    let lower = if n == 0 { Subspace::zero(f, c.dim()) } else { v.filtration.terms[n - 1].clone() };
    let w = json!({ "kind": "loewy_layer", "layer": n, "upper": sub_json(upper), "lower": sub_json(&lower) });
    let ok = (|| -> Result<bool, Error> {
        let Some(back) = round_trip(&w) else { return Ok(false) };
        let parse = |key: &str| -> Result<Subspace<F>, Error> {
            serde_json::from_value::<SubspaceJson>(back[key].clone())
                .map_err(|e| Error::Parse(e.to_string()))?
                .to_subspace(f)
        };
        let (upper, lower) = (parse("upper")?, parse("lower")?);
        let m = c.regular_comodule();
        if !m.is_subcomodule(&upper) || !m.is_subcomodule(&lower) || !lower.is_subspace_of(&upper) {
            return Ok(false);
        }
        Ok(layer(c, &upper, &lower)?.is_simple(cfg)?.verdict == Verdict::No)
    })()
    .unwrap_or(false);
    Ok((w, ok))
}

/// For checks expected to fail that came out positive: the certificate itself, confirmed by a rerun.
fn certificate_witness<T: Serialize>(certificate: &T, rerun: impl Fn() -> Result<Verdict, Error>) -> (Value, bool) {
    let w = json!({ "kind": "positive_certificate", "certificate": serde_json::to_value(certificate).unwrap_or(Value::Null) });
    (w, matches!(rerun(), Ok(Verdict::Yes)))
}

fn witness_list<F: Field>(ws: &[Witness<F>], m: &Comodule<F>) -> (Value, bool) {
    let list: Vec<WitnessJson> = ws.iter().map(WitnessJson::from_witness).collect();
    let w = json!({ "kind": "distributivity", "witnesses": list });
    let f = m.field();
    let ok = !ws.is_empty()
        && round_trip(&w)
            .and_then(|v| serde_json::from_value::<Vec<WitnessJson>>(v["witnesses"].clone()).ok())
            .map(|back| back.iter().all(|j| j.to_witness(f).map(|x| x.validate(m)).unwrap_or(false)))
            .unwrap_or(false);
    (w, ok)
}

fn revalidate_zero_divisors<F: Field>(a: &Algebra<F>, w: &Value) -> bool {
    let f = a.field();
    let parse = |key: &str| -> Option<Vec<F::Elem>> {
        let strs: Vec<String> = serde_json::from_value(w[key].clone()).ok()?;
        strs.iter().map(|s| f.parse(s).ok()).collect()
    };
    match (parse("x"), parse("y")) {
        (Some(x), Some(y)) => {
            let nonzero = |v: &[F::Elem]| v.iter().any(|e| !f.is_zero(e));
            nonzero(&x) && nonzero(&y) && a.product(&x, &y).iter().all(|e| f.is_zero(e))
        }
        _ => false,
    }
}

/// Chain check run ahead of analyses that need a chain coalgebra.
fn chain_or_witness<F: Factorable>(
    c: &Coalgebra<F>,
    cfg: &AnalysisConfig,
) -> Result<Result<ChainVerdict<F>, Outcome>, Error> {
    let v = is_chain_coalgebra(c, cfg)?;
    Ok(match v.verdict {
        Verdict::Yes => Ok(v),
        Verdict::Unknown => Err(Outcome::degraded(&Error::Unknown("chain property undecided".into()))),
        Verdict::No => {
            let (w, ok) = layer_witness(c, &v, cfg)?;
            Err(Outcome::failed(
                Some(Verdict::No),
                Some(true),
                w,
                ok,
                "not a chain coalgebra".into(),
            ))
        }
    })
}

/// Distributive coalgebras have only loops and isolated vertices in their quiver.
fn loops_only<F: Field>(target: &str, q: &QuiverReport<F>) -> InvariantResult {
    let bad: Vec<(usize, usize)> = q.arrows.iter().copied().filter(|(a, b)| a != b).collect();
    InvariantResult {
        name: "distributive_quiver_has_only_loops".into(),
        target: target.to_string(),
        holds: bad.is_empty(),
        witness: (!bad.is_empty()).then(|| {
            json!({
                "arrows": bad,
                "vertices": q.vertices.iter().map(sub_json).collect::<Vec<_>>(),
            })
        }),
    }
}
