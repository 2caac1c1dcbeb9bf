//! JSON encodings of reports; text output is rendered from the same value.

use cyclify_core::brauer::{
    Certificate, ClosedPoint, CorProfile, Irreducibility, LedgerRow, ReciprocityLedger, ResidueClass,
    TrivialityStatus, Witness,
};
use cyclify_core::cyclify::{Claim, CyclicOutput, Verification, VerificationRow};
use cyclify_core::geometry::ProjectiveMap;
use cyclify_core::pipeline::{Agreement, ComparisonRow};
use cyclify_core::poly3::{format_birat, format_lpoly, format_ratfunc, format_uni, Matrix3};
use cyclify_core::scalar::rational_string;
use cyclify_core::brauer::BrauerPresentation;
use cyclify_core::Scalar;
use serde_json::{json, Map, Value};
use cyclify_core::brauer::SymbolAlgebra;

/// Rationals as `"p/q"`; other scalars as their coordinate list in `rho`.
pub fn scalar(s: &Scalar) -> Value {
    match s.as_rational() {
        Some(q) => Value::String(rational_string(&q)),
        None => Value::Array(s.coords().iter().map(|q| Value::String(rational_string(q))).collect()),
    }
}

pub fn matrix(m: &Matrix3) -> Value {
    Value::Array(m.iter().map(|row| Value::Array(row.iter().map(scalar).collect())).collect())
}

pub fn point(p: &ClosedPoint) -> Value {
    Value::String(p.label())
}

pub fn residue(r: &ResidueClass) -> Value {
    json!({
        "point": point(&r.point),
        "degree": r.point.degree(),
        "representative": format_lpoly(r.value.rep()),
        "reduced": format_lpoly(&r.reduced_representative()),
    })
}

pub fn witness(w: &Witness) -> Value {
    json!({ "w": format_lpoly(w.w.rep()), "c": scalar(&w.c) })
}

pub fn profile(p: &CorProfile) -> Value {
    Value::Array(
        p.entries
            .iter()
            .map(|(m, part)| json!({ "multiplicity": m, "part": format_uni(part, 0) }))
            .collect(),
    )
}

pub fn certificate(c: &Certificate) -> Value {
    match c {
        Certificate::Profile(p) => json!({ "kind": "profile", "profile": profile(p) }),
        Certificate::Norm(p) => json!({ "kind": "norm", "profile": profile(p) }),
        Certificate::Specialization(s) => json!({
            "kind": "specialization",
            "prime": s.prime,
            "rho_image": s.rho_image,
            "samples": s.samples.iter().map(|(x0, y0, chi)| json!({ "x": x0, "y": y0, "character": chi })).collect::<Vec<_>>(),
        }),
    }
}

pub fn status(s: &TrivialityStatus) -> Value {
    match s {
        TrivialityStatus::UnramifiedExact(w) => json!({ "kind": "UnramifiedExact", "witness": witness(w) }),
        TrivialityStatus::NontrivialCertified(c) => json!({ "kind": "NontrivialCertified", "certificate": certificate(c) }),
        TrivialityStatus::Undetermined => json!({ "kind": "Undetermined" }),
    }
}

pub fn irreducibility(i: &Irreducibility) -> Value {
    match i {
        Irreducibility::Certified { x0 } => json!({ "kind": "certified", "specialization": scalar(x0) }),
        Irreducibility::Asserted => json!({ "kind": "asserted" }),
    }
}

pub fn symbol(s: &SymbolAlgebra) -> Value {
    json!({ "a": format_birat(&s.a), "b": format_birat(&s.b) })
}

pub fn presentation(a: &BrauerPresentation) -> Value {
    json!({
        "n": a.n(),
        "symbols": a.terms().iter().map(|(s, e)| json!({ "a": format_birat(&s.a), "b": format_birat(&s.b), "exp": e })).collect::<Vec<_>>(),
    })
}

pub fn ledger_row(r: &LedgerRow) -> Value {
    json!({
        "residue": residue(&r.residue),
        "norm": format_ratfunc(&r.norm),
        "profile": profile(&r.profile),
    })
}

pub fn ledger(l: &ReciprocityLedger) -> Value {
    json!({
        "rows": l.rows.iter().map(ledger_row).collect::<Vec<_>>(),
        "combined": profile(&l.combined),
        "exact_product_is_one": l.exact_product_is_one,
        "verdict": l.verdict,
    })
}

const VARS: [&str; 3] = ["x", "y", "z"];

pub fn map(m: &ProjectiveMap) -> Value {
    let chart = match m.chart {
        Some(c) => json!({ "affine": VARS[c.affine], "base": VARS[c.base] }),
        None => Value::Null,
    };
    json!({ "matrix": matrix(m.matrix()), "determinant": scalar(&m.det()), "chart_swap": chart })
}

fn claim(c: &Claim) -> Value {
    json!({
        "role": c.role.name(),
        "expected": residue(&c.expected),
        "witness": witness(&c.witness),
    })
}

pub fn construction(o: &CyclicOutput) -> Value {
    let mut v = json!({
        "case": o.case.name(),
        "n": o.n,
        "symbol": symbol(&o.symbol),
        "literal_symbol": symbol(&o.literal),
        "slots_swapped": o.swapped,
        "claims": o.claims.iter().map(claim).collect::<Vec<_>>(),
    });
    if let Some(s) = &o.mobius {
        v["mobius"] = Value::String(format_birat(s));
    }
    v
}

fn verification_row(r: &VerificationRow) -> Value {
    json!({
        "role": r.role.name(),
        "residue": residue(&r.residue),
        "expected": residue(&r.expected),
        "witness": r.witness.as_ref().map(witness),
        "passed": r.passed,
        "note": r.note,
    })
}

pub fn verification(v: &Verification) -> Value {
    json!({
        "rows": v.rows.iter().map(verification_row).collect::<Vec<_>>(),
        "reciprocity": ledger(&v.reciprocity),
        "passed": v.passed,
    })
}

pub fn comparison_row(r: &ComparisonRow) -> Value {
    let agreement = match r.agreement {
        Agreement::Witnessed => "witnessed",
        Agreement::Refuted => "refuted",
        Agreement::Assumed => "assumed",
    };
    json!({
        "point": point(&r.point),
        "role": r.role.map(|x| x.name()),
        "input": format_lpoly(r.input.value.rep()),
        "output": format_lpoly(r.output.value.rep()),
        "witness": r.witness.as_ref().map(witness),
        "agreement": agreement,
    })
}

/// Indented `key: value` lines.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write_text(&mut out, v, 0);
    out
}

fn leaf(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| matches!(x, Value::String(_) | Value::Number(_))) => {
            Some(format!("[{}]", a.iter().map(|x| leaf(x).unwrap_or_default()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn write_text(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => write_map(out, m, indent),
        Value::Array(a) => {
            for item in a {
                match leaf(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write_text(out, item, indent + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", leaf(other).unwrap_or_default())),
    }
}

fn write_map(out: &mut String, m: &Map<String, Value>, indent: usize) {
    let pad = "  ".repeat(indent);
    for (k, v) in m {
        match leaf(v) {
            Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
            None if matches!(v, Value::Array(a) if a.is_empty()) => out.push_str(&format!("{pad}{k}: []\n")),
            None => {
                out.push_str(&format!("{pad}{k}:\n"));
                write_text(out, v, indent + 1);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_strings() {
        assert_eq!(scalar(&Scalar::ratio(-3, 6)), json!("-1/2"));
        assert_eq!(scalar(&Scalar::rho(3).unwrap()), json!(["0", "1"]));
    }

    #[test]
    fn keys_are_sorted() {
        let v = json!({ "b": 1, "a": 2 });
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"a":2,"b":1}"#);
    }
}
