//! Machine-readable reports. Every report is a JSON object whose keys keep the
//! order in which they are listed here.

use std::time::Duration;

use crimp_core::checks::{CheckReport, Fact};
use crimp_core::reductions::{Certificate, CertifiedInstance};
use crimp_core::solvers::{GapSolution, Solution};
use crimp_core::{EdgeSet, ExactRatio, Instance};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioField {
    pub numerator: u64,
    pub denominator: u64,
    /// Display only.
    pub decimal: String,
}

impl From<ExactRatio> for RatioField {
    fn from(r: ExactRatio) -> RatioField {
        RatioField { numerator: r.numerator(), denominator: r.denominator(), decimal: format!("{:.6}", r.to_f64()) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub algorithm: String,
    pub policy: Option<String>,
    pub fingerprint: String,
    pub n: usize,
    pub m: usize,
    pub a: u32,
    pub b: u32,
    pub k: usize,
    pub added: Vec<[u32; 2]>,
    pub cc_a: u64,
    pub cc_b: u64,
    pub ratio: RatioField,
    pub gap: u64,
    pub elapsed_seconds: f64,
}

pub fn fingerprint_hex(inst: &Instance) -> String {
    format!("{:016x}", inst.fingerprint())
}

fn edge_pairs(added: &EdgeSet) -> Vec<[u32; 2]> {
    added.iter().map(|(u, v)| [u, v]).collect()
}

impl RunReport {
    fn base(inst: &Instance, algorithm: &str, added: &EdgeSet, cc_a: u64, cc_b: u64, elapsed: Duration) -> RunReport {
        RunReport {
            algorithm: algorithm.to_string(),
            policy: None,
            fingerprint: fingerprint_hex(inst),
            n: inst.graph().n(),
            m: inst.graph().m(),
            a: inst.a(),
            b: inst.b(),
            k: inst.k(),
            added: edge_pairs(added),
            cc_a,
            cc_b,
            ratio: ExactRatio::from_sums(cc_a, cc_b).into(),
            gap: cc_a.abs_diff(cc_b),
            elapsed_seconds: elapsed.as_secs_f64(),
        }
    }

    pub fn from_solution(inst: &Instance, s: &Solution) -> RunReport {
        let mut r = RunReport::base(inst, s.algorithm.tag(), &s.added, s.cc_a, s.cc_b, s.elapsed);
        r.policy = s.policy.map(|p| p.tag().to_string());
        r
    }

    pub fn from_gap(inst: &Instance, s: &GapSolution) -> RunReport {
        RunReport::base(inst, s.algorithm.tag(), &s.added, s.cc_a, s.cc_b, s.elapsed)
    }

    /// Recomputes the sums of `G + added` and compares every derived field.
    pub fn reverify(&self, inst: &Instance) -> Result<(), String> {
        if self.fingerprint != fingerprint_hex(inst) {
            return Err("fingerprint does not match the instance".into());
        }
        if self.added.len() > inst.k() {
            return Err(format!("{} edges exceed the budget {}", self.added.len(), inst.k()));
        }
        let added: Vec<(u32, u32)> = self.added.iter().map(|&[u, v]| (u, v)).collect();
        let g = inst.graph();
        g.check_additions(&added).map_err(|e| e.to_string())?;
        let x = g.closeness_with(inst.a(), &added).map_err(|e| e.to_string())?;
        let y = g.closeness_with(inst.b(), &added).map_err(|e| e.to_string())?;
        let ratio: RatioField = ExactRatio::from_sums(x, y).into();
        if (x, y) != (self.cc_a, self.cc_b) || ratio.numerator != self.ratio.numerator || ratio.denominator != self.ratio.denominator || self.gap != x.abs_diff(y) {
            return Err(format!("report claims sums ({}, {}), recomputed ({x}, {y})", self.cc_a, self.cc_b));
        }
        Ok(())
    }
}

fn fact_value(f: Fact) -> Value {
    match f {
        Fact::Int(v) => json!(v),
        Fact::Ratio(r) => serde_json::to_value(RatioField::from(r)).expect("plain struct"),
        Fact::Bool(b) => json!(b),
        Fact::Vertex(v) => json!(v),
    }
}

pub fn check_report_json(r: &CheckReport) -> Value {
    let mut facts = Map::new();
    for &(name, value) in &r.facts {
        facts.insert(name.to_string(), fact_value(value));
    }
    json!({
        "check": r.check,
        "fingerprint": format!("{:016x}", r.fingerprint),
        "verdict": r.verdict.tag(),
        "reason": r.reason,
        "facts": facts,
    })
}

fn certificate_json(c: &Certificate) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(c.name()));
    match c {
        Certificate::OptRatioIsOne { witness, sum } => {
            obj.insert("witness".into(), json!(edge_pairs(witness)));
            obj.insert("sum".into(), json!(sum));
        }
        Certificate::OptRatioBelow { bound } => {
            obj.insert("bound".into(), json!(bound.to_string()));
        }
        Certificate::OptRatioAtLeast { witness, bound } => {
            obj.insert("witness".into(), json!(edge_pairs(witness)));
            obj.insert("bound".into(), json!(bound.to_string()));
        }
        Certificate::GapZero { witness } => {
            obj.insert("witness".into(), json!(edge_pairs(witness)));
        }
        Certificate::WitnessRatioAbove { witness, bound } => {
            obj.insert("witness".into(), json!(edge_pairs(witness)));
            obj.insert("bound".into(), json!(bound));
        }
        Certificate::RatioUpperBound { bound } => {
            obj.insert("bound".into(), json!(bound));
        }
        Certificate::InputRatio { ratio } => {
            obj.insert("ratio".into(), json!(ratio.to_string()));
        }
        Certificate::Asymptotic { label, added, target, tolerance } => {
            obj.insert("label".into(), json!(label));
            obj.insert("added".into(), json!(edge_pairs(added)));
            obj.insert("target".into(), json!(target.to_string()));
            obj.insert("tolerance".into(), json!(tolerance.to_string()));
        }
        Certificate::GapAtLeastOne | Certificate::ForwardOnly => {}
    }
    Value::Object(obj)
}

/// Sidecar written next to generated instances.
pub fn certificate_sidecar(cert: &CertifiedInstance) -> Value {
    let mut params = Map::new();
    for (k, v) in &cert.params {
        params.insert(k.clone(), json!(v));
    }
    json!({
        "family": cert.family.tag(),
        "fingerprint": fingerprint_hex(&cert.instance),
        "params": params,
        "certificates": cert.certificates.iter().map(certificate_json).collect::<Vec<_>>(),
        "candidates": cert.candidates.iter().map(|(l, (u, v))| json!({"label": l, "edge": [u, v]})).collect::<Vec<_>>(),
        "roles": cert.roles.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
    })
}

pub fn to_pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}
