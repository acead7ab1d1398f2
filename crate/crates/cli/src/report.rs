//! Text and JSON rendering. JSON keys follow the library's field names.

use std::fmt::Write as _;

use dialgebra::completion::{
    CheckReport, CompletionResult, CompletionStatus, ReducedBasis, Verdict,
};
use dialgebra::compositions::{ClosureVerdict, Composition};
use dialgebra::{Coefficient, DiPolynomial, Membership, NormalForm, RuleSet, SDiword};
use serde_json::{json, Value};

pub fn json_line(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string_pretty(v).expect("values serialize"));
    out.push('\n');
}

pub fn verdict_text(v: Verdict) -> String {
    match v {
        Verdict::GSUpToBound(d) => format!("GSUpToBound({d})"),
        v => v.name().to_string(),
    }
}

fn verdict_json(v: Verdict) -> Value {
    match v {
        Verdict::GSUpToBound(d) => json!({ "GSUpToBound": d }),
        v => json!(v.name()),
    }
}

fn poly(p: &DiPolynomial, rules: &RuleSet) -> String {
    p.display(rules.alphabet()).to_string()
}

fn combination(items: &[(Coefficient, SDiword)], rules: &RuleSet) -> Value {
    items
        .iter()
        .map(|(c, sd)| json!({ "coeff": c.to_string(), "sdiword": sd.display(rules).to_string() }))
        .collect()
}

fn composition_json(c: &Composition, rules: &RuleSet) -> Value {
    let name = |id: usize| rules.get(id).map(|r| r.name().to_string()).ok();
    json!({
        "kind": c.kind.name(),
        "ambiguity": c.ambiguity.display(rules.alphabet()).to_string(),
        "value": poly(&c.value, rules),
        "f": name(c.f),
        "g": c.g.and_then(name),
        "description": c.describe(rules),
        "expression": combination(&c.expression, rules),
    })
}

fn closure_verdict(v: &ClosureVerdict, rules: &RuleSet) -> (String, Value) {
    match v {
        ClosureVerdict::Closed => ("closed".into(), json!("Closed")),
        ClosureVerdict::ClosedUpToBound(d) => (
            format!("closed up to |u| = {d}"),
            json!({ "ClosedUpToBound": d }),
        ),
        ClosureVerdict::Nontrivial { witness, residual } => {
            let u = rules.alphabet().render(witness);
            let r = poly(residual, rules);
            (
                format!("nontrivial at u = {u}, residual {r}"),
                json!({ "Nontrivial": { "witness": u, "residual": r } }),
            )
        }
    }
}

pub fn check_json(rep: &CheckReport, rules: &RuleSet) -> Value {
    let rule_name = |id: usize| rules.rules()[id].name().to_string();
    json!({
        "verdict": verdict_json(rep.verdict),
        "witnesses": rep.witnesses.iter().map(|w| json!({
            "composition": composition_json(&w.composition, rules),
            "remainder": poly(&w.remainder, rules),
        })).collect::<Vec<_>>(),
        "stats": rep.stats.iter().map(|(k, s)| {
            (k.name().to_string(), json!({ "total": s.total, "nontrivial": s.nontrivial }))
        }).collect::<serde_json::Map<_, _>>(),
        "compositions": rep.compositions.iter().map(|c| json!({
            "composition": composition_json(&c.composition, rules),
            "remainder": poly(&c.remainder, rules),
        })).collect::<Vec<_>>(),
        "closures": rep.closures.iter().map(|(id, r)| json!({
            "rule": rule_name(*id),
            "verdict": closure_verdict(&r.verdict, rules).1,
            "obligations": r.obligations,
        })).collect::<Vec<_>>(),
    })
}

pub fn check_text(out: &mut String, rep: &CheckReport, rules: &RuleSet) {
    writeln!(out, "verdict: {}", verdict_text(rep.verdict)).unwrap();
    let names: Vec<_> = rules.rules().iter().map(|r| r.name()).collect();
    writeln!(out, "rules: {} ({})", names.len(), names.join(", ")).unwrap();
    for (kind, s) in &rep.stats {
        writeln!(
            out,
            "{kind}: {} total, {} nontrivial",
            s.total, s.nontrivial
        )
        .unwrap();
    }
    for c in &rep.compositions {
        let status = if c.remainder.is_zero() {
            "trivial"
        } else {
            "NONTRIVIAL"
        };
        writeln!(
            out,
            "  {} = {}: {status}",
            c.composition.describe(rules),
            poly(&c.composition.value, rules)
        )
        .unwrap();
    }
    for (id, r) in &rep.closures {
        let (text, _) = closure_verdict(&r.verdict, rules);
        writeln!(
            out,
            "closure {}: {text} ({} obligations)",
            rules.rules()[*id].name(),
            r.obligations
        )
        .unwrap();
    }
    for w in &rep.witnesses {
        writeln!(
            out,
            "witness: {} reduces to {}",
            w.composition.describe(rules),
            poly(&w.remainder, rules)
        )
        .unwrap();
    }
}

fn status_text(s: &CompletionStatus) -> String {
    match s {
        CompletionStatus::Complete(v) => format!("complete ({})", verdict_text(*v)),
        CompletionStatus::FuelExhausted => "fuel exhausted".into(),
    }
}

pub fn completion_json(res: &CompletionResult) -> Value {
    let rules = &res.basis;
    json!({
        "basis": rules.rules().iter().map(|r| json!({
            "name": r.name(),
            "poly": poly(r.poly(), rules),
        })).collect::<Vec<_>>(),
        "status": match &res.status {
            CompletionStatus::Complete(v) => json!({ "Complete": verdict_json(*v) }),
            CompletionStatus::FuelExhausted => json!("FuelExhausted"),
        },
        "log": res.log.iter().map(|s| json!({
            "rule": rules.rules()[s.rule].name(),
            "poly": poly(&s.poly, rules),
            "source": composition_json(&s.source, rules),
            "certificate": combination(&s.certificate, rules),
        })).collect::<Vec<_>>(),
        "report": res.report.as_ref().map(|r| check_json(r, rules)),
    })
}

pub fn completion_text(out: &mut String, res: &CompletionResult) {
    let rules = &res.basis;
    writeln!(out, "# status: {}", status_text(&res.status)).unwrap();
    writeln!(out, "# added: {}", res.log.len()).unwrap();
    for s in &res.log {
        writeln!(
            out,
            "# {} from {}",
            rules.rules()[s.rule].name(),
            s.source.describe(rules)
        )
        .unwrap();
    }
}

pub fn reduced_json(red: &ReducedBasis) -> Value {
    let named = |s: &RuleSet| {
        s.rules()
            .iter()
            .map(|r| json!({ "name": r.name(), "poly": poly(r.poly(), s) }))
            .collect::<Vec<_>>()
    };
    json!({
        "basis": named(&red.basis),
        "raw": named(&red.raw),
        "report": check_json(&red.report, &red.basis),
        "recompletions": red.recompletions,
    })
}

pub fn nf_json(nf: &NormalForm, rules: &RuleSet) -> Value {
    json!({
        "nf": poly(&nf.nf, rules),
        "trace": nf.trace.iter().map(|(c, o)| json!({
            "coeff": c.to_string(),
            "occurrence": o.display(rules).to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn membership_json(m: &Membership, rules: &RuleSet) -> Value {
    match m {
        Membership::Certified(c) => json!({ "Certified": combination(c, rules) }),
        Membership::UnknownAtBound(b) => json!({ "UnknownAtBound": b }),
    }
}

pub fn membership_text(out: &mut String, m: &Membership, rules: &RuleSet) {
    match m {
        Membership::Certified(c) => {
            writeln!(out, "certified").unwrap();
            for (k, sd) in c {
                writeln!(out, "  {k} * {}", sd.display(rules)).unwrap();
            }
        }
        Membership::UnknownAtBound(b) => writeln!(out, "unknown at bound {b}").unwrap(),
    }
}
