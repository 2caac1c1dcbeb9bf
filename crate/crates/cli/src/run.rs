//! Subcommands: turn a job into a report and an exit code.

use cyclify_core::brauer::{
    certify_irreducible, ramification_profile, reciprocity_check, BrauerPresentation, CheckOptions, ClosedPoint,
    Irreducibility, ResidueClass, SymbolAlgebra, TrivialityStatus, Witness,
};
use cyclify_core::geometry::{check_normal_form, classify_configuration, normalize, apply_map_to_presentation, HomPoly};
use cyclify_core::pipeline::{run_cyclify, run_pipeline, TargetInput};
use cyclify_core::scalar::MAX_ORDER;
use cyclify_core::{Error, Field, LPoly, Ring};
use serde_json::{json, Value};

use crate::job::JobSpec;
use crate::parse::{parse_birat, parse_poly, ParseError};
use crate::report;

pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Residues,
    Reciprocity,
    Transform,
    Cyclify,
    Pipeline,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Residues => "residues",
            Command::Reciprocity => "reciprocity",
            Command::Transform => "transform",
            Command::Cyclify => "cyclify",
            Command::Pipeline => "pipeline",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [Command::Residues, Command::Reciprocity, Command::Transform, Command::Cyclify, Command::Pipeline]
            .into_iter()
            .find(|c| c.name() == s)
    }
}

#[derive(Debug)]
pub enum RunError {
    Parse { field: String, err: ParseError },
    Core(Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Core(e)
    }
}

impl RunError {
    fn code(&self) -> i32 {
        match self {
            RunError::Parse { .. } => EXIT_UNSUPPORTED,
            RunError::Core(e) if e.is_unsupported() || matches!(e, Error::NotInvertible(_)) => EXIT_UNSUPPORTED,
            RunError::Core(_) => EXIT_FAILED,
        }
    }

    fn message(&self) -> String {
        match self {
            RunError::Parse { field, err } => format!("cannot parse {field}: {err}"),
            RunError::Core(e) => e.to_string(),
        }
    }
}

type Res<T> = Result<T, RunError>;

/// A report together with the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

fn parse_ctx<T>(field: String, r: Result<T, ParseError>) -> Res<T> {
    r.map_err(|err| RunError::Parse { field, err })
}

fn options(job: &JobSpec) -> CheckOptions {
    CheckOptions { seed: job.options.seed, rounds: job.options.rounds, factor_bound: job.options.factor_bound }
}

fn check_order(n: u32) -> Res<()> {
    if !(2..=MAX_ORDER).contains(&n) {
        return Err(Error::UnsupportedOrder(n).into());
    }
    Ok(())
}

pub fn presentation(job: &JobSpec) -> Res<BrauerPresentation> {
    let mut terms = Vec::new();
    for (i, s) in job.symbols.iter().enumerate() {
        let a = parse_ctx(format!("symbols[{i}].a"), parse_birat(&s.a, job.n))?;
        let b = parse_ctx(format!("symbols[{i}].b"), parse_birat(&s.b, job.n))?;
        terms.push((SymbolAlgebra::new(a, b)?, s.exp));
    }
    Ok(BrauerPresentation::new(job.n, terms)?)
}

fn components(job: &JobSpec) -> Res<Vec<(HomPoly, bool)>> {
    job.curve
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let p = parse_ctx(format!("curve[{i}].equation"), parse_poly(&c.equation, job.n))?;
            Ok((HomPoly::new(p)?, c.irreducible))
        })
        .collect()
}

/// A polynomial in `y` over `k0(x)`.
fn parse_lpoly(field: String, src: &str, n: u32) -> Res<LPoly> {
    let e = parse_ctx(field.clone(), parse_birat(src, n))?;
    if e.den().deg() > 0 {
        return Err(Error::Invalid(format!("{field} must be polynomial in y")).into());
    }
    let inv = e.den().lc().inv().expect("nonzero");
    Ok(e.num().map(|c| c.mul(&inv)))
}

fn targets(job: &JobSpec) -> Res<(Vec<TargetInput>, Vec<String>)> {
    let mut out = Vec::new();
    let mut assumptions = Vec::new();
    for (i, t) in job.targets.iter().enumerate() {
        let point = if t.point.trim() == "inf" {
            ClosedPoint::Infinity
        } else {
            let f = parse_lpoly(format!("targets[{i}].point"), &t.point, job.n)?;
            let point = ClosedPoint::finite(&f)?;
            if certify_irreducible(&point.modulus(), job.n, job.options.factor_bound)? == Irreducibility::Asserted {
                assumptions.push(format!("{} is irreducible (input assertion)", point.label()));
            }
            point
        };
        let rep = parse_lpoly(format!("targets[{i}].residue"), &t.residue, job.n)?;
        let residue = ResidueClass::from_poly(point.clone(), &rep, job.n)?;
        let witness = match &t.witness {
            Some(w) => {
                let wp = parse_lpoly(format!("targets[{i}].witness.w"), &w.w, job.n)?;
                let c = parse_ctx(format!("targets[{i}].witness.c"), parse_poly(&w.c, job.n))?;
                let c = c
                    .terms()
                    .find(|(e, _)| **e == [0, 0, 0])
                    .filter(|_| c.terms().count() == 1)
                    .map(|(_, c)| c.clone())
                    .ok_or_else(|| Error::Invalid(format!("targets[{i}].witness.c must be a nonzero constant")))?;
                Some(Witness { w: point.reduce(&wp)?, c })
            }
            None => None,
        };
        out.push(TargetInput { residue, witness });
    }
    Ok((out, assumptions))
}

fn ramified(rows: &[cyclify_core::brauer::RamificationRow]) -> Vec<Value> {
    rows.iter()
        .filter(|r| !matches!(r.status, TrivialityStatus::UnramifiedExact(_)))
        .map(|r| report::point(&r.residue.point))
        .collect()
}

fn residues_cmd(job: &JobSpec) -> Res<Outcome> {
    let a = presentation(job)?;
    let rows = ramification_profile(&a, job.n, &options(job))?;
    let report = json!({
        "presentation": report::presentation(&a),
        "points": rows.iter().map(|r| json!({
            "residue": report::residue(&r.residue),
            "status": report::status(&r.status),
            "irreducibility": report::irreducibility(&r.irreducibility),
        })).collect::<Vec<_>>(),
        "ramified": ramified(&rows),
    });
    Ok(Outcome { code: EXIT_VERIFIED, report })
}

fn reciprocity_cmd(job: &JobSpec) -> Res<Outcome> {
    let a = presentation(job)?;
    let ledger = reciprocity_check(&a, &a.candidate_points())?;
    let rows = ramification_profile(&a, job.n, &options(job))?;
    let ok = ledger.verdict && ledger.exact_product_is_one;
    let mut report = json!({
        "presentation": report::presentation(&a),
        "ledger": report::ledger(&ledger),
        "ramified": ramified(&rows),
        "verdict": ok,
    });
    if !ok {
        let offending: Vec<Value> =
            ledger.rows.iter().filter(|r| !r.profile.is_trivial()).map(|r| report::point(&r.residue.point)).collect();
        report["offending_points"] = Value::Array(offending);
    }
    Ok(Outcome { code: if ok { EXIT_VERIFIED } else { EXIT_FAILED }, report })
}

fn transform_cmd(job: &JobSpec) -> Res<Outcome> {
    let opts = options(job);
    let config = classify_configuration(components(job)?, job.n, job.n, opts.factor_bound)?;
    let norm = normalize(&config, job.n, opts.factor_bound)?;
    let ok = check_normal_form(config.kind, &norm.components);
    let mut report = json!({
        "configuration": config.kind.name(),
        "components": config.components.iter().map(|c| json!({
            "equation": c.equation.to_string(),
            "asserted_irreducible": c.asserted_irreducible,
            "irreducibility": report::irreducibility(&c.check),
        })).collect::<Vec<_>>(),
        "map": report::map(&norm.map),
        "transformed": norm.components.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "notes": norm.notes,
        "normal_form_ok": ok,
    });
    if !job.symbols.is_empty() {
        let a = presentation(job)?;
        report["transformed_presentation"] = report::presentation(&apply_map_to_presentation(&a, &norm.map)?);
    }
    Ok(Outcome { code: if ok { EXIT_VERIFIED } else { EXIT_FAILED }, report })
}

fn cyclify_cmd(job: &JobSpec) -> Res<Outcome> {
    let (targets, mut assumptions) = targets(job)?;
    if targets.is_empty() {
        return Err(Error::Invalid("cyclify needs at least one target".into()).into());
    }
    let r = run_cyclify(&targets, job.n, &options(job))?;
    assumptions.extend(r.assumptions.iter().cloned());
    let mut report = json!({
        "realizable": r.realizable,
        "target_profiles": r.target_profiles.iter().map(|(p, prof)| json!({
            "point": report::point(p),
            "profile": report::profile(prof),
        })).collect::<Vec<_>>(),
        "combined_profile": report::profile(&r.combined),
        "assumptions": assumptions,
        "verified": r.verified,
    });
    if !r.realizable {
        report["offending_points"] = Value::Array(r.offending.iter().map(report::point).collect());
        report["note"] = json!("the prescribed residues violate reciprocity; no algebra has them");
    }
    if let Some(c) = &r.construction {
        report["construction"] = report::construction(c);
    }
    if let Some(v) = &r.verification {
        report["verification"] = report::verification(v);
    }
    report["comparison"] = Value::Array(r.comparison.iter().map(report::comparison_row).collect());
    let failed: Vec<Value> = r
        .comparison
        .iter()
        .filter(|c| c.agreement == cyclify_core::pipeline::Agreement::Refuted)
        .map(|c| report::point(&c.point))
        .collect();
    if !failed.is_empty() {
        report["offending_points"] = Value::Array(failed);
    }
    Ok(Outcome { code: if r.verified { EXIT_VERIFIED } else { EXIT_FAILED }, report })
}

fn pipeline_cmd(job: &JobSpec) -> Res<Outcome> {
    let a = presentation(job)?;
    let r = run_pipeline(&a, components(job)?, &options(job))?;
    let offending: Vec<Value> = r
        .comparison
        .iter()
        .filter(|c| c.agreement == cyclify_core::pipeline::Agreement::Refuted)
        .map(|c| report::point(&c.point))
        .chain(r.verification.failures().map(|f| report::point(&f.residue.point)))
        .collect();
    let report = json!({
        "configuration": r.configuration.kind.name(),
        "components": r.configuration.components.iter().map(|c| json!({
            "equation": c.equation.to_string(),
            "asserted_irreducible": c.asserted_irreducible,
            "irreducibility": report::irreducibility(&c.check),
        })).collect::<Vec<_>>(),
        "map": report::map(&r.normalization.map),
        "transformed_locus": r.normalization.components.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "normal_form_ok": r.normal_form_ok,
        "notes": r.notes,
        "input": report::presentation(&a),
        "transformed": report::presentation(&r.transformed),
        "locus_points": r.locus_points.iter().map(report::point).collect::<Vec<_>>(),
        "profile": r.profile.iter().map(|p| json!({
            "residue": report::residue(&p.residue),
            "on_locus": p.on_locus,
            "status": report::status(&p.status),
            "irreducibility": report::irreducibility(&p.irreducibility),
        })).collect::<Vec<_>>(),
        "input_reciprocity": report::ledger(&r.input_reciprocity),
        "construction": report::construction(&r.construction),
        "verification": report::verification(&r.verification),
        "comparison": r.comparison.iter().map(report::comparison_row).collect::<Vec<_>>(),
        "symbol_in_input_coordinates": report::presentation(&r.pulled_back),
        "assumptions": r.assumptions,
        "equivalence": "Faddeev equivalent over k(x) by equal residues at all finite points; Brauer equivalent since Br(k(x)) = 0 for algebraically closed k (Tsen)",
        "index_exponent": "the class is one cyclic symbol of degree n, so its index divides n; index = exponent for such classes is cited, not recomputed",
        "offending_points": offending,
        "verified": r.verified,
    });
    Ok(Outcome { code: if r.verified { EXIT_VERIFIED } else { EXIT_FAILED }, report })
}

/// Run one subcommand; errors become reports with exit code 1 or 2.
pub fn run(cmd: Command, job: &JobSpec) -> Outcome {
    let result = check_order(job.n).and_then(|_| match cmd {
        Command::Residues => residues_cmd(job),
        Command::Reciprocity => reciprocity_cmd(job),
        Command::Transform => transform_cmd(job),
        Command::Cyclify => cyclify_cmd(job),
        Command::Pipeline => pipeline_cmd(job),
    });
    let (code, mut report) = match result {
        Ok(o) => (o.code, o.report),
        Err(e) => (e.code(), json!({ "error": e.message() })),
    };
    report["command"] = json!(cmd.name());
    report["n"] = json!(job.n);
    report["exit_code"] = json!(code);
    Outcome { code, report }
}

