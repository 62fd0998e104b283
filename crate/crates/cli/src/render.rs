//! Text and JSON rendering of reports.
//!
//! JSON documents are versioned (`schema_version: "1"`) and byte-stable:
//! field order is fixed, and Gram matrices, basis coordinates and
//! determinants are emitted as decimal strings so nothing is truncated
//! downstream.

use cubic_lattice::hassett::{RationalLociReport, SubReport, SweepSummary, WitnessReport};
use cubic_lattice::lattice_core::AMBIENT_CONVENTION;
use cubic_lattice::{GramMatrix, LatticeVector};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use std::fmt::Write as _;

pub const SCHEMA_VERSION: &str = "1";

/// Assemble the versioned document around a report body.
pub fn document(command: &str, inputs: Value, report: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "ambient_convention": AMBIENT_CONVENTION,
        "report": report,
    })
}

pub fn text_header(command: &str, inputs: &[(&str, String)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "schema_version: {SCHEMA_VERSION}");
    let _ = writeln!(out, "command: {command}");
    for (k, v) in inputs {
        let _ = writeln!(out, "input {k}: {v}");
    }
    let _ = writeln!(out, "ambient_convention: {AMBIENT_CONVENTION}");
    out
}

fn gram_json(g: &GramMatrix) -> Value {
    let n = g.dim();
    Value::Array(
        (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| Value::String(g.matrix()[(i, j)].to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn basis_json(basis: &[LatticeVector]) -> Value {
    Value::Array(
        basis
            .iter()
            .map(|v| {
                Value::Array(
                    v.coords()
                        .iter()
                        .map(|c| Value::String(c.to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn big_opt(v: &Option<BigInt>) -> Value {
    match v {
        Some(x) => Value::String(x.to_string()),
        None => Value::Null,
    }
}

fn sub_report_json(s: &SubReport) -> Value {
    json!({
        "name": s.name,
        "gram": gram_json(&s.gram),
        "det": s.det.to_string(),
        "expected_det": s.expected_det.to_string(),
        "saturated_in_parent": s.saturated_in_parent,
        "ok": s.ok,
    })
}

pub fn witness_report_json(r: &WitnessReport) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(r.kind.name()));
    if let Some(d1) = r.d1 {
        m.insert("d1".into(), json!(d1));
    }
    if let Some(d2) = r.d2 {
        m.insert("d2".into(), json!(d2));
    }
    m.insert("basis".into(), basis_json(&r.basis));
    m.insert("gram".into(), gram_json(&r.gram));
    m.insert("positive_definite".into(), json!(r.positive_definite));
    m.insert("saturated_in_L".into(), json!(r.saturated_in_l));
    m.insert("contains_h2".into(), json!(r.contains_h2));
    m.insert("represents_two".into(), json!(r.represents_two));
    m.insert("min_norm".into(), big_opt(&r.min_norm));
    m.insert("det_m".into(), json!(r.det_m.to_string()));
    m.insert("expected_det".into(), big_opt(&r.expected_det));
    m.insert("codimension".into(), json!(r.codimension));
    m.insert(
        "sub_reports".into(),
        Value::Array(r.sub_reports.iter().map(sub_report_json).collect()),
    );
    m.insert("pass".into(), json!(r.pass));
    Value::Object(m)
}

fn matrix_lines(out: &mut String, label: &str, g: &GramMatrix) {
    let _ = writeln!(out, "{label}:");
    for i in 0..g.dim() {
        let row: Vec<String> = (0..g.dim())
            .map(|j| g.matrix()[(i, j)].to_string())
            .collect();
        let _ = writeln!(out, "  {}", row.join(" "));
    }
}

pub fn witness_report_text(r: &WitnessReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind: {}", r.kind.name());
    if let (Some(d1), Some(d2)) = (r.d1, r.d2) {
        let _ = writeln!(out, "d1: {d1}");
        let _ = writeln!(out, "d2: {d2}");
    }
    let _ = writeln!(out, "basis:");
    for v in &r.basis {
        let row: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "  {}", row.join(" "));
    }
    matrix_lines(&mut out, "gram", &r.gram);
    let _ = writeln!(out, "positive_definite: {}", r.positive_definite);
    let _ = writeln!(out, "saturated_in_L: {}", r.saturated_in_l);
    let _ = writeln!(out, "contains_h2: {}", r.contains_h2);
    let _ = writeln!(
        out,
        "represents_two: {}",
        r.represents_two
            .map_or("undefined".to_string(), |b| b.to_string())
    );
    let _ = writeln!(
        out,
        "min_norm: {}",
        r.min_norm
            .as_ref()
            .map_or("undefined".to_string(), BigInt::to_string)
    );
    let _ = writeln!(out, "det_m: {}", r.det_m);
    if let Some(e) = &r.expected_det {
        let _ = writeln!(out, "expected_det: {e}");
    }
    let _ = writeln!(out, "codimension: {}", r.codimension);
    if !r.sub_reports.is_empty() {
        let _ = writeln!(out, "sublattices:");
        for s in &r.sub_reports {
            let _ = writeln!(
                out,
                "  {}: det {}, expected {}, saturated_in_parent {}, ok {}",
                s.name, s.det, s.expected_det, s.saturated_in_parent, s.ok
            );
        }
    }
    let _ = writeln!(out, "pass: {}", r.pass);
    out
}

pub fn loci_json(r: &RationalLociReport) -> Value {
    json!({
        "d": r.d,
        "reports": Value::Array(r.reports.iter().map(witness_report_json).collect()),
        "dets": Value::Array(r.dets.iter().map(|d| Value::String(d.to_string())).collect()),
        "dets_distinct": r.dets_distinct,
        "pass": r.pass,
    })
}

pub fn loci_text(r: &RationalLociReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "d: {}", r.d);
    for rep in &r.reports {
        let _ = writeln!(out, "--- witness ({}, {}) ---", r.d, rep.d2.unwrap_or(0));
        out.push_str(&witness_report_text(rep));
    }
    let dets: Vec<String> = r.dets.iter().map(BigInt::to_string).collect();
    let _ = writeln!(out, "dets: {}", dets.join(" "));
    let _ = writeln!(out, "dets_distinct: {}", r.dets_distinct);
    let _ = writeln!(out, "pass: {}", r.pass);
    out
}

pub fn sweep_json(s: &SweepSummary) -> Value {
    json!({
        "max_d": s.max_d,
        "star_values": s.star_values,
        "pairs_checked": s.pairs_checked,
        "case_tallies": { "case_1": s.case_tallies[0], "case_2": s.case_tallies[1], "case_3": s.case_tallies[2] },
        "failures": Value::Array(s.failures.iter().map(|f| json!({
            "d1": f.d1,
            "d2": f.d2,
            "kind": f.kind.name(),
            "failed_checks": f.failed_checks,
        })).collect()),
        "pass": s.pass(),
    })
}

pub fn sweep_text(s: &SweepSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "max_d: {}", s.max_d);
    let _ = writeln!(out, "star_values: {}", s.star_values.len());
    let _ = writeln!(out, "pairs: {}", s.pairs_checked);
    let _ = writeln!(
        out,
        "case_tallies: case_1 {}, case_2 {}, case_3 {}",
        s.case_tallies[0], s.case_tallies[1], s.case_tallies[2]
    );
    let _ = writeln!(out, "failures: {}", s.failures.len());
    for f in &s.failures {
        let _ = writeln!(
            out,
            "  ({}, {}) {}: {}",
            f.d1,
            f.d2,
            f.kind.name(),
            f.failed_checks.join(", ")
        );
    }
    let _ = writeln!(out, "pass: {}", s.pass());
    out
}
