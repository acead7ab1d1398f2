//! Basis checking, Shirshov completion and reduced bases.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::One;

use crate::compositions::{
    all_compositions, compositions_touching, right_multiplication, right_multiplication_closure,
    ClosureReport, ClosureVerdict, Composition, CompositionKind,
};
use crate::diword::NormalDiword;
use crate::error::{Error, Result};
use crate::order::compare;
use crate::par::{self, Execution};
use crate::poly::{Coefficient, DiPolynomial};
use crate::rewrite::{find_occurrence, normal_form, reduce, SDiword};
use crate::rules::RuleSet;

pub const DEFAULT_RM_DEPTH: usize = 8;
pub const DEFAULT_FUEL: usize = 512;

/// What completion inserts for a nontrivial composition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AddPolicy {
    /// The composition itself, made monic.
    #[default]
    Composition,
    /// Its normal form modulo the current basis, made monic.
    Remainder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    /// Tail-length bound for the right-multiplication closure.
    pub rm_depth: usize,
    /// Maximum number of rules completion may add.
    pub fuel: usize,
    pub policy: AddPolicy,
    pub exec: Execution,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            rm_depth: DEFAULT_RM_DEPTH,
            fuel: DEFAULT_FUEL,
            policy: AddPolicy::default(),
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    GS,
    GSUpToBound(usize),
    NotGS,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::GS => "GS",
            Verdict::GSUpToBound(_) => "GSUpToBound",
            Verdict::NotGS => "NotGS",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub composition: Composition,
    pub remainder: DiPolynomial,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KindStats {
    pub total: usize,
    pub nontrivial: usize,
}

/// One reduced composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedComposition {
    pub composition: Composition,
    pub remainder: DiPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub stats: BTreeMap<CompositionKind, KindStats>,
    pub compositions: Vec<CheckedComposition>,
    /// Right-multiplication analysis per non-strong rule id.
    pub closures: Vec<(usize, ClosureReport)>,
}

impl CheckReport {
    pub fn is_gs(&self) -> bool {
        self.verdict != Verdict::NotGS
    }

    pub fn of_kind(&self, kind: CompositionKind) -> impl Iterator<Item = &CheckedComposition> + '_ {
        self.compositions
            .iter()
            .filter(move |c| c.composition.kind == kind)
    }
}

fn reduce_all(
    comps: Vec<Composition>,
    rules: &RuleSet,
    exec: Execution,
) -> Vec<CheckedComposition> {
    let remainders = par::map(exec, &comps, |c| reduce(&c.value, rules));
    comps
        .into_iter()
        .zip(remainders)
        .map(|(composition, remainder)| CheckedComposition {
            composition,
            remainder,
        })
        .collect()
}

fn closures(
    rules: &RuleSet,
    ids: &[usize],
    depth: usize,
    exec: Execution,
) -> Result<Vec<(usize, ClosureReport)>> {
    let reports = par::map(exec, ids, |&id| {
        right_multiplication_closure(&rules.rules()[id], rules, depth)
    });
    ids.iter()
        .copied()
        .zip(reports)
        .map(|(id, r)| r.map(|r| (id, r)))
        .collect()
}

/// Checks every composition of `rules` for triviality.
pub fn check_gs(rules: &RuleSet, cfg: &CheckConfig) -> Result<CheckReport> {
    if cfg.rm_depth < 1 {
        return Err(Error::InvalidDepthBound);
    }
    let checked = reduce_all(all_compositions(rules, cfg.exec), rules, cfg.exec);
    let weak: Vec<usize> = rules
        .rules()
        .iter()
        .filter(|r| !r.is_strong())
        .map(|r| r.id())
        .collect();
    let closures = closures(rules, &weak, cfg.rm_depth, cfg.exec)?;

    let mut stats: BTreeMap<CompositionKind, KindStats> = CompositionKind::ALL
        .iter()
        .map(|&k| (k, KindStats::default()))
        .collect();
    let mut witnesses = Vec::new();
    for c in &checked {
        let entry = stats
            .get_mut(&c.composition.kind)
            .expect("all kinds present");
        entry.total += 1;
        if !c.remainder.is_zero() {
            entry.nontrivial += 1;
            witnesses.push(Witness {
                composition: c.composition.clone(),
                remainder: c.remainder.clone(),
            });
        }
    }
    let mut bounded = None;
    for (id, report) in &closures {
        let entry = stats
            .get_mut(&CompositionKind::RightMultiplication)
            .expect("all kinds present");
        entry.total += 1;
        match &report.verdict {
            ClosureVerdict::Closed => {}
            ClosureVerdict::ClosedUpToBound(d) => bounded = Some(*d),
            ClosureVerdict::Nontrivial { witness, residual } => {
                entry.nontrivial += 1;
                witnesses.push(Witness {
                    composition: right_multiplication(&rules.rules()[*id], witness, rules),
                    remainder: residual.clone(),
                });
            }
        }
    }
    let verdict = if !witnesses.is_empty() {
        Verdict::NotGS
    } else if let Some(d) = bounded {
        Verdict::GSUpToBound(d)
    } else {
        Verdict::GS
    };
    Ok(CheckReport {
        verdict,
        witnesses,
        stats,
        compositions: checked,
        closures,
    })
}

/// A rule inserted by completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionStep {
    pub rule: usize,
    pub poly: DiPolynomial,
    pub source: Composition,
    /// `poly = Σ c · expand(d)`, using only rules with smaller ids.
    pub certificate: Vec<(Coefficient, SDiword)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete(Verdict),
    FuelExhausted,
}

#[derive(Clone, Debug)]
pub struct CompletionResult {
    pub basis: RuleSet,
    pub status: CompletionStatus,
    pub log: Vec<CompletionStep>,
    /// The certifying check of the final basis, when completion finished.
    pub report: Option<CheckReport>,
}

impl CompletionResult {
    pub fn is_complete(&self) -> bool {
        matches!(self.status, CompletionStatus::Complete(_))
    }
}

/// Pending compositions, kept sorted by ambiguity. Equal ambiguities keep
/// detection order.
struct Queue {
    items: Vec<Composition>,
}

impl Queue {
    fn extend(&mut self, more: Vec<Composition>, rules: &RuleSet) {
        let order = &**rules.order();
        let mut more = more;
        more.sort_by(|a, b| compare(&a.ambiguity, &b.ambiguity, order));
        let old = std::mem::take(&mut self.items);
        let mut merged = Vec::with_capacity(old.len() + more.len());
        let (mut i, mut j) = (old.into_iter().peekable(), more.into_iter().peekable());
        loop {
            let take_old = match (i.peek(), j.peek()) {
                (Some(a), Some(b)) => compare(&a.ambiguity, &b.ambiguity, order).is_le(),
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            let next = if take_old { i.next() } else { j.next() };
            merged.extend(next);
        }
        self.items = merged;
    }
}

const BATCH: usize = 64;

/// Everything a freshly added rule `id` contributes to the queue.
fn fresh_compositions(basis: &RuleSet, id: usize, cfg: &CheckConfig) -> Result<Vec<Composition>> {
    let mut out = compositions_touching(basis, id, cfg.exec);
    let r = &basis.rules()[id];
    if !r.is_strong() {
        let report = right_multiplication_closure(r, basis, cfg.rm_depth)?;
        if let ClosureVerdict::Nontrivial { witness, .. } = report.verdict {
            out.push(right_multiplication(r, &witness, basis));
        }
    }
    Ok(out)
}

/// Shirshov completion: adds nontrivial compositions, smallest ambiguity
/// first, until every composition is trivial or `cfg.fuel` rules have been
/// added. A full `check_gs` certifies the result.
pub fn complete(start: &RuleSet, cfg: &CheckConfig) -> Result<CompletionResult> {
    if cfg.fuel < 1 {
        return Err(Error::InvalidFuel);
    }
    if cfg.rm_depth < 1 {
        return Err(Error::InvalidDepthBound);
    }
    let mut basis = start.clone();
    let mut log: Vec<CompletionStep> = Vec::new();
    let mut queue = Queue { items: Vec::new() };
    let mut initial = all_compositions(&basis, cfg.exec);
    let weak: Vec<usize> = (0..basis.len())
        .filter(|&id| !basis.rules()[id].is_strong())
        .collect();
    for (id, report) in closures(&basis, &weak, cfg.rm_depth, cfg.exec)? {
        if let ClosureVerdict::Nontrivial { witness, .. } = report.verdict {
            initial.push(right_multiplication(&basis.rules()[id], &witness, &basis));
        }
    }
    queue.extend(initial, &basis);
    loop {
        if queue.items.is_empty() {
            let full = check_gs(&basis, cfg)?;
            if full.is_gs() {
                let verdict = full.verdict;
                return Ok(CompletionResult {
                    basis,
                    status: CompletionStatus::Complete(verdict),
                    log,
                    report: Some(full),
                });
            }
            let witnesses = full.witnesses.into_iter().map(|w| w.composition).collect();
            queue.extend(witnesses, &basis);
        }
        // Reduce a batch in parallel against the current basis. Zero
        // remainders are dropped; the first survivor is inserted.
        let take = BATCH.min(queue.items.len());
        let batch: Vec<Composition> = queue.items.drain(..take).collect();
        let speculative = par::map(cfg.exec, &batch, |c| reduce(&c.value, &basis));
        let mut rest = batch.into_iter().zip(speculative);
        while let Some((comp, spec)) = rest.next() {
            if spec.is_zero() {
                continue;
            }
            let nf = normal_form(&comp.value, &basis);
            debug_assert_eq!(nf.nf, spec);
            if log.len() >= cfg.fuel {
                return Ok(CompletionResult {
                    basis,
                    status: CompletionStatus::FuelExhausted,
                    log,
                    report: None,
                });
            }
            let (raw, mut certificate) = match cfg.policy {
                AddPolicy::Composition => (comp.value.clone(), comp.expression.clone()),
                AddPolicy::Remainder => {
                    let mut cert = comp.expression.clone();
                    for (c, occ) in &nf.trace {
                        cert.push((-c.clone(), occ.to_sdiword(&basis)?));
                    }
                    (nf.nf.clone(), cert)
                }
            };
            let scale = raw
                .leading(&**basis.order())
                .ok_or(Error::ZeroPolynomial)?
                .1
                .recip();
            for (c, _) in certificate.iter_mut() {
                *c = &*c * &scale;
            }
            let poly = raw.scale(&scale);
            let id = basis.len();
            basis.push_named(format!("c{}", log.len() + 1), poly.clone())?;
            log.push(CompletionStep {
                rule: id,
                poly,
                source: comp,
                certificate,
            });
            // Smaller ambiguities may now exist; requeue the remainder of
            // the batch together with the new rule's compositions.
            let mut pending: Vec<Composition> = rest.by_ref().map(|(c, _)| c).collect();
            pending.extend(fresh_compositions(&basis, id, cfg)?);
            queue.extend(pending, &basis);
            break;
        }
    }
}

/// Output of `reduce_basis`.
#[derive(Clone, Debug)]
pub struct ReducedBasis {
    pub basis: RuleSet,
    /// The construction's first candidate, before any verification.
    pub raw: RuleSet,
    pub report: CheckReport,
    /// How many times the candidate failed verification and was completed.
    pub recompletions: usize,
}

fn cmp_polys(a: &DiPolynomial, b: &DiPolynomial, rules: &RuleSet) -> Ordering {
    let order = &**rules.order();
    let ta = a.terms_desc(order);
    let tb = b.terms_desc(order);
    for (x, y) in ta.iter().zip(&tb) {
        let o = compare(x.0, y.0, order).then_with(|| x.1.cmp(y.1));
        if o != Ordering::Equal {
            return o;
        }
    }
    ta.len().cmp(&tb.len())
}

fn lead_of(p: &DiPolynomial, rules: &RuleSet) -> NormalDiword {
    p.leading_monomial(&**rules.order())
        .expect("rules are nonzero")
        .clone()
}

/// Replaces every tail by its normal form modulo the other rules.
fn interreduce(named: &mut [(String, DiPolynomial)], template: &RuleSet) -> Result<()> {
    loop {
        let mut changed = false;
        for i in 0..named.len() {
            let others = template.rebuild(
                named
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, (n, p))| (n.clone(), p.clone())),
            )?;
            let lead = lead_of(&named[i].1, template);
            let mut tail = named[i].1.clone();
            tail.remove(&lead);
            let nf = reduce(&tail, &others);
            if nf != tail {
                let mut p = nf;
                p.add_term(lead, Coefficient::one());
                named[i].1 = p;
                changed = true;
            }
        }
        if !changed {
            return Ok(());
        }
    }
}

fn construct(rules: &RuleSet) -> Result<RuleSet> {
    let order = &**rules.order();
    // (1) monic, canonical order, one rule per leading monomial
    let mut named: Vec<(String, DiPolynomial)> = rules
        .rules()
        .iter()
        .map(|r| (r.name().to_string(), r.poly().clone()))
        .collect();
    named.sort_by(|a, b| cmp_polys(&a.1, &b.1, rules).then_with(|| a.0.cmp(&b.0)));
    named.dedup_by(|b, a| lead_of(&a.1, rules) == lead_of(&b.1, rules));
    // (2) tails into Irr of the whole set
    let whole = rules.rebuild(named.iter().cloned())?;
    for (_, p) in named.iter_mut() {
        let lead = lead_of(p, rules);
        let mut tail = p.clone();
        tail.remove(&lead);
        let mut q = reduce(&tail, &whole);
        q.add_term(lead, Coefficient::one());
        *p = q;
    }
    named.sort_by(|a, b| compare(&lead_of(&a.1, rules), &lead_of(&b.1, rules), order));
    loop {
        // (3) keep rules whose leading monomial is irreducible by smaller ones
        let mut kept = rules.rebuild(Vec::<(String, DiPolynomial)>::new())?;
        let mut selected = Vec::new();
        for (name, p) in &named {
            if find_occurrence(&lead_of(p, rules), &kept).is_none() {
                kept.push_named(name.clone(), p.clone())?;
                selected.push((name.clone(), p.clone()));
            }
        }
        // (4) tails into Irr of the others
        interreduce(&mut selected, rules)?;
        if selected == named {
            return rules.rebuild(selected);
        }
        named = selected;
    }
}

/// True when every support diword of each rule is irreducible modulo the
/// other rules.
pub fn is_reduced(rules: &RuleSet) -> Result<bool> {
    for (i, r) in rules.rules().iter().enumerate() {
        let others = rules.rebuild(
            rules
                .rules()
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, s)| (s.name().to_string(), s.poly().clone())),
        )?;
        if r.poly()
            .support()
            .any(|d| find_occurrence(d, &others).is_some())
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the reduced basis of `Id(rules)` and verifies it, completing and
/// rebuilding whenever verification fails.
pub fn reduce_basis(rules: &RuleSet, cfg: &CheckConfig) -> Result<ReducedBasis> {
    let raw = construct(rules)?;
    let mut candidate = raw.clone();
    let mut recompletions = 0;
    let mut spent = 0;
    loop {
        let report = check_gs(&candidate, cfg)?;
        if report.is_gs() {
            return Ok(ReducedBasis {
                basis: candidate,
                raw,
                report,
                recompletions,
            });
        }
        if spent >= cfg.fuel {
            return Err(Error::FuelExhausted { added: spent });
        }
        let sub = CheckConfig {
            fuel: cfg.fuel - spent,
            ..*cfg
        };
        let done = complete(&candidate, &sub)?;
        spent += done.log.len();
        if !done.is_complete() {
            return Err(Error::FuelExhausted { added: spent });
        }
        recompletions += 1;
        candidate = construct(&done.basis)?;
    }
}
