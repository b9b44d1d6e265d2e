//! Batch runner: reads a JSON list of constructions and analyses, runs them over the
//! requested field and writes a JSON report plus DOT files for requested quivers.
//!
//! Exit status: 0 when every check passes, 1 when a check fails (the report carries a
//! witness), 2 for input errors, 3 when a budget or cap left some verdict partial.

mod analyze;
mod build;
pub mod error;
pub mod report;
pub mod spec;

use std::fs;
use std::path::{Path, PathBuf};

use coalg_core::{AnalysisConfig, Factorable, FieldDescriptor, PrimeField, Rationals};

pub use analyze::{CheckResult, InvariantResult, Status};
pub use error::CliError;
pub use report::{ConstructionSummary, QuiverFile, RunReport, RunStatus};
pub use spec::{parse_spec, validate, RunSpec, ValidatedSpec};

pub const BUDGET_ENV: &str = "COALG_LAB_BUDGET";

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub budget: Option<u64>,
    pub degree_cap: Option<usize>,
    pub out: Option<PathBuf>,
}

/// The enumeration budget used when neither the command line nor the spec file sets one.
pub fn default_budget() -> Result<u64, CliError> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("{BUDGET_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(AnalysisConfig::default().budget),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_spec(path: &Path) -> Result<ValidatedSpec, CliError> {
    validate(parse_spec(&read(path)?)?)
}

fn execute<F: Factorable>(field: &F, spec: &ValidatedSpec, opts: &Options) -> Result<RunReport, CliError> {
    let s = &spec.spec;
    let base = AnalysisConfig {
        budget: match opts.budget.or(s.budget) {
            Some(b) => b,
            None => default_budget()?,
        },
        degree_cap: opts.degree_cap.or(s.degree_cap).unwrap_or(AnalysisConfig::default().degree_cap),
    };
    let store = build::build_all(field, spec, &base)?;
    let constructions = s
        .constructions
        .iter()
        .map(|c| {
            let obj = &store[&c.name];
            ConstructionSummary {
                name: c.name.clone(),
                kind: c.kind.clone(),
                object: obj.kind(),
                dim: obj.dim(),
            }
        })
        .collect();
    let mut checks = Vec::new();
    let mut invariants = Vec::new();
    for a in &s.analyses {
        let cfg = AnalysisConfig {
            budget: opts.budget.or(a.budget).unwrap_or(base.budget),
            degree_cap: opts.degree_cap.or(a.degree_cap).unwrap_or(base.degree_cap),
        };
        let analyzer = analyze::Analyzer {
            name: &a.target,
            cfg,
            copies: a.copies,
            expect: &a.expect,
        };
        let (c, i) = analyzer.run(&store[&a.target], &a.checks);
        checks.extend(c);
        invariants.extend(i);
    }
    let quivers = checks
        .iter()
        .filter(|c| c.dot.is_some())
        .map(|c| QuiverFile {
            target: c.target.clone(),
            file: s.outputs.quivers.get(&c.target).cloned().unwrap_or_else(|| format!("{}.dot", c.target)),
        })
        .collect();
    let status = RunStatus::of(&checks, &invariants);
    Ok(RunReport {
        field: s.field.to_string(),
        budget: base.budget,
        degree_cap: base.degree_cap,
        status,
        exit_code: status.exit_code(),
        constructions,
        checks,
        invariants,
        quivers,
    })
}

/// Runs a validated spec without touching the filesystem.
pub fn run_validated(spec: &ValidatedSpec, opts: &Options) -> Result<RunReport, CliError> {
    match spec.spec.field {
        FieldDescriptor::Rationals => execute(&Rationals, spec, opts),
        FieldDescriptor::PrimeField(p) => {
            let f = PrimeField::new(p).map_err(|e| CliError::Invalid(e.to_string()))?;
            execute(&f, spec, opts)
        }
    }
}

/// Writes the report and one DOT file per quiver into `dir`; returns the paths written.
pub fn write_outputs(report: &RunReport, spec: &RunSpec, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let io = |path: &Path| {
        let path = path.display().to_string();
        move |source| CliError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    let mut written = Vec::new();
    let report_path = dir.join(spec.outputs.report.as_deref().unwrap_or("report.json"));
    fs::write(&report_path, report.to_json()).map_err(io(&report_path))?;
    written.push(report_path);
    for q in &report.quivers {
        let dot = report
            .checks
            .iter()
            .find(|c| c.target == q.target && c.dot.is_some())
            .and_then(|c| c.dot.as_deref())
            .expect("quiver files come from quiver checks");
        let path = dir.join(&q.file);
        fs::write(&path, dot).map_err(io(&path))?;
        written.push(path);
    }
    Ok(written)
}

/// `run <spec.json>`: parse, validate, build, analyze, and write outputs when a directory is given.
pub fn run_spec(path: &Path, opts: &Options) -> Result<RunReport, CliError> {
    let spec = load_spec(path)?;
    let report = run_validated(&spec, opts)?;
    if let Some(dir) = &opts.out {
        write_outputs(&report, &spec.spec, dir)?;
    }
    Ok(report)
}

/// Text for `explain <kind>`, covering construction kinds and check names.
pub fn explain(name: &str) -> Option<String> {
    if let Some(k) = spec::kind_info(name) {
        return Some(format!(
            "{} (produces {:?})\n  params: {}\n  {}\n",
            k.kind, k.produces, k.params, k.summary
        ));
    }
    let checks: Vec<_> = spec::CHECKS.iter().filter(|c| c.check == name).collect();
    if checks.is_empty() {
        return None;
    }
    let mut out = format!("{name} (analysis)\n");
    for c in checks {
        out.push_str(&format!("  on {:?}: {}\n", c.applies_to, c.summary));
    }
    Some(out)
}
