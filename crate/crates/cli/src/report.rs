//! The report document shared by the human and JSON outputs.

use std::fmt::Write as _;

use serde::Serialize;
use tamedeg_core::automorphism::{VerifiedWord, WitnessTemplate};
use tamedeg_core::classify::{
    Certificate, ClassificationResult, ConditionRow, CorollaryOutcome, DeltaEntry, Verdict, VerdictKind,
};
use tamedeg_core::degree::GroupElem;
use tamedeg_core::search::{word_to_steps, StepRecord};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub query: Query,
    pub verdict: VerdictKind,
    pub headline: String,
    pub certificate: Option<CertificateDoc>,
    pub witness: Option<WitnessDoc>,
    /// Why an `Unknown` verdict could not be settled.
    pub reasons: Vec<String>,
    /// Every condition evaluated on the way to the verdict.
    pub conditions: Vec<ConditionRow>,
    pub corollary: Option<CorollaryDoc>,
    pub registry_fingerprint: String,
    pub timings: Timings,
}

#[derive(Debug, Serialize)]
pub struct Query {
    pub degrees: Vec<GroupElem>,
    pub weight: Vec<GroupElem>,
    /// Components of the map, for `certify-wild`.
    pub components: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct CertificateDoc {
    pub theorem: String,
    pub conditions: Vec<ConditionRow>,
    pub delta_bounds_used: Vec<DeltaDoc>,
}

#[derive(Debug, Serialize)]
pub struct DeltaDoc {
    pub weight: Vec<GroupElem>,
    pub pair: [GroupElem; 2],
    pub bound: GroupElem,
    pub display: String,
}

#[derive(Debug, Serialize)]
pub struct WitnessDoc {
    pub template: Option<String>,
    pub steps: Vec<StepRecord>,
    pub components: Vec<String>,
    pub mdeg: Vec<GroupElem>,
    pub jacobian: String,
}

#[derive(Debug, Serialize)]
pub struct CorollaryDoc {
    pub name: String,
    pub triple: [u64; 3],
    /// `null` when the corollary makes no claim for this input.
    pub predicted_realizable: Option<bool>,
    pub agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub elapsed_ms: f64,
}

fn delta_doc(e: &DeltaEntry) -> DeltaDoc {
    DeltaDoc { weight: e.weight.clone(), pair: e.pair.clone(), bound: e.bound.clone(), display: e.to_string() }
}

fn certificate_doc(c: &Certificate) -> CertificateDoc {
    CertificateDoc {
        theorem: c.theorem.to_string(),
        conditions: c.conditions.clone(),
        delta_bounds_used: c.delta_bounds_used.iter().map(delta_doc).collect(),
    }
}

fn template_name(t: &WitnessTemplate) -> String {
    match t {
        WitnessTemplate::SemigroupCombination { a, b } => format!("d3 = {a}*d1 + {b}*d2"),
        WitnessTemplate::Divisible { m } => format!("d2 = {m}*d1"),
    }
}

pub fn witness_doc(word: &VerifiedWord, template: Option<&WitnessTemplate>) -> WitnessDoc {
    let realized = word.realized();
    let jacobian = realized.jacobian_det().map(|j| j.to_string()).unwrap_or_else(|e| format!("error: {e}"));
    WitnessDoc {
        template: template.map(template_name),
        steps: word_to_steps(word.word()),
        components: realized.components().iter().map(ToString::to_string).collect(),
        mdeg: word.mdeg().to_vec(),
        jacobian,
    }
}

impl Report {
    pub fn from_result(command: &str, result: &ClassificationResult, registry_fingerprint: String) -> Report {
        let (certificate, witness, reasons) = match &result.verdict {
            Verdict::Excluded(c) => (Some(certificate_doc(c)), None, Vec::new()),
            Verdict::Realizable(w) => (None, Some(witness_doc(&w.word, w.template.as_ref())), Vec::new()),
            Verdict::Unknown { reasons, .. } => (None, None, reasons.clone()),
        };
        Report {
            schema_version: REPORT_SCHEMA_VERSION,
            command: command.to_string(),
            query: Query {
                degrees: result.query.clone(),
                weight: result.weight.components().to_vec(),
                components: None,
            },
            verdict: result.verdict.kind(),
            headline: result.headline(),
            certificate,
            witness,
            reasons,
            conditions: result.verdict.conditions().to_vec(),
            corollary: None,
            registry_fingerprint,
            timings: Timings { elapsed_ms: 0.0 },
        }
    }

    pub fn with_corollary(mut self, outcome: &CorollaryOutcome) -> Report {
        self.corollary = Some(CorollaryDoc {
            name: outcome.corollary.name().to_string(),
            triple: outcome.triple,
            predicted_realizable: outcome.predicted_realizable,
            agrees: outcome.agrees(),
        });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let list = |v: &[GroupElem]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let _ = writeln!(out, "{} ({}) weight ({})", self.command, list(&self.query.degrees), list(&self.query.weight));
        if let Some(cs) = &self.query.components {
            for (i, c) in cs.iter().enumerate() {
                let _ = writeln!(out, "  f{} = {c}", i + 1);
            }
        }
        let _ = writeln!(out, "{}", self.headline);
        if let Some(c) = &self.corollary {
            let claim = match c.predicted_realizable {
                Some(true) => "realizable",
                Some(false) => "not realizable",
                None => "no claim",
            };
            let agree = if c.agrees { "agrees" } else { "DISAGREES" };
            let t = c.triple;
            let _ = writeln!(out, "corollary {} on ({},{},{}): {claim}; verdict {agree}", c.name, t[0], t[1], t[2]);
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(out, "theorem: {}", c.theorem);
            for d in &c.delta_bounds_used {
                let _ = writeln!(out, "registry: {}", d.display);
            }
        }
        for r in &self.reasons {
            let _ = writeln!(out, "reason: {r}");
        }
        if !self.conditions.is_empty() {
            out.push_str(&condition_table(&self.conditions));
        }
        if let Some(w) = &self.witness {
            if let Some(t) = &w.template {
                let _ = writeln!(out, "template: {t}");
            }
            out.push_str(&witness_text(w));
        }
        out
    }
}

fn witness_text(w: &WitnessDoc) -> String {
    let mut out = String::from("word:\n");
    for (i, s) in w.steps.iter().enumerate() {
        let _ = write!(out, "  {}. x{} -> ", i + 1, s.target);
        if s.scale != "1" {
            let _ = write!(out, "{}*", s.scale);
        }
        let _ = write!(out, "x{}", s.target);
        if s.shift != "0" {
            let _ = write!(out, " + ({})", s.shift);
        }
        out.push('\n');
    }
    out.push_str("components:\n");
    for (i, c) in w.components.iter().enumerate() {
        let _ = writeln!(out, "  f{} = {c}", i + 1);
    }
    out
}

pub fn condition_table(rows: &[ConditionRow]) -> String {
    let header = ["condition", "lhs", "rel", "rhs", "holds"];
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.condition.clone(),
                r.lhs.clone(),
                r.relation.clone(),
                r.rhs.clone(),
                if r.holds { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for c in &cells {
        for (w, s) in width.iter_mut().zip(c) {
            *w = (*w).max(s.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cols: [&str; 5]| {
        let padded: Vec<String> = cols.iter().zip(width).map(|(s, w)| format!("{s:<w$}")).collect();
        let _ = writeln!(out, "  {}", padded.join("  ").trim_end());
    };
    line(header);
    for c in &cells {
        line([&c[0], &c[1], &c[2], &c[3], &c[4]]);
    }
    out
}
