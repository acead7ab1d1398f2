//! Composition detection, triviality and the right-multiplication closure.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::One;

use crate::alphabet::{Letter, Word};
use crate::diword::NormalDiword;
use crate::error::{Error, Result};
use crate::order::compare;
use crate::par::{self, Execution};
use crate::poly::{Coefficient, DiPolynomial};
use crate::rewrite::{instantiate, normal_form, p_set, reduce, NormalForm, Occurrence, SDiword};
use crate::rules::{RewriteRule, RuleSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompositionKind {
    Inclusion,
    Intersection,
    LeftMultiplication,
    RightMultiplication,
    LeftMultInclusion,
    RightMultInclusion,
    LeftMultIntersection,
    RightMultIntersection,
}

impl CompositionKind {
    pub const ALL: [CompositionKind; 8] = [
        CompositionKind::Inclusion,
        CompositionKind::Intersection,
        CompositionKind::LeftMultiplication,
        CompositionKind::RightMultiplication,
        CompositionKind::LeftMultInclusion,
        CompositionKind::RightMultInclusion,
        CompositionKind::LeftMultIntersection,
        CompositionKind::RightMultIntersection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CompositionKind::Inclusion => "inclusion",
            CompositionKind::Intersection => "intersection",
            CompositionKind::LeftMultiplication => "left-multiplication",
            CompositionKind::RightMultiplication => "right-multiplication",
            CompositionKind::LeftMultInclusion => "left-mult-inclusion",
            CompositionKind::RightMultInclusion => "right-mult-inclusion",
            CompositionKind::LeftMultIntersection => "left-mult-intersection",
            CompositionKind::RightMultIntersection => "right-mult-intersection",
        }
    }

    /// Multiplication compositions are bounded by their own leading monomial
    /// rather than strictly by the ambiguity.
    pub fn is_multiplication(self) -> bool {
        matches!(
            self,
            CompositionKind::LeftMultiplication | CompositionKind::RightMultiplication
        )
    }
}

impl fmt::Display for CompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A critical situation between rules `f` and (optionally) `g`.
///
/// `value` equals `Σ c · expand(d)` over `expression`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub kind: CompositionKind,
    pub ambiguity: NormalDiword,
    pub value: DiPolynomial,
    pub f: usize,
    pub g: Option<usize>,
    pub expression: Vec<(Coefficient, SDiword)>,
}

impl Composition {
    pub fn describe(&self, rules: &RuleSet) -> String {
        let name = |id: usize| {
            rules
                .get(id)
                .map(|r| r.name().to_string())
                .unwrap_or_else(|_| format!("#{id}"))
        };
        let amb = self.ambiguity.display(rules.alphabet());
        let alphabet = rules.alphabet();
        match self.kind {
            CompositionKind::LeftMultiplication => {
                let x = alphabet.name(self.ambiguity.letters()[0]);
                format!("{} ⊣ {} at {amb}", x, name(self.f))
            }
            CompositionKind::RightMultiplication => {
                let tail = &self.ambiguity.letters()[rules.rules()[self.f].word().len()..];
                format!(
                    "{} ⊢ [{} @ {}] at {amb}",
                    name(self.f),
                    alphabet.render(tail),
                    tail.len()
                )
            }
            kind => format!(
                "{kind} {} ∧ {} at {amb}",
                name(self.f),
                self.g.map(name).unwrap_or_default()
            ),
        }
    }

    /// Re-expands the recorded expression.
    pub fn expression_value(&self, rules: &RuleSet) -> Result<DiPolynomial> {
        let mut sum = DiPolynomial::zero();
        for (c, d) in &self.expression {
            sum.add_scaled(c, &d.expand(rules)?);
        }
        Ok(sum)
    }
}

fn occ_term(
    rules: &RuleSet,
    c: Coefficient,
    rule: usize,
    left: &[Letter],
    right: &[Letter],
    center: usize,
) -> (Coefficient, SDiword) {
    let occ = Occurrence {
        rule,
        left: left.to_vec(),
        right: right.to_vec(),
        center,
    };
    let sd = occ.to_sdiword(rules).expect("rule ids come from the set");
    (c, sd)
}

fn binomial(
    rules: &RuleSet,
    kind: CompositionKind,
    f: &RewriteRule,
    g: &RewriteRule,
    lhs: (&[Letter], &[Letter], usize),
    rhs: (&[Letter], &[Letter], usize),
) -> Composition {
    let pos = instantiate(f, lhs.0, lhs.1, lhs.2).expect("admissible lhs");
    let neg = instantiate(g, rhs.0, rhs.1, rhs.2).expect("admissible rhs");
    let ambiguity = NormalDiword::new_unchecked(Word::sandwich(lhs.0, f.word(), lhs.1), lhs.2);
    Composition {
        kind,
        ambiguity,
        value: &pos - &neg,
        f: f.id(),
        g: Some(g.id()),
        expression: vec![
            occ_term(rules, Coefficient::one(), f.id(), lhs.0, lhs.1, lhs.2),
            occ_term(rules, -Coefficient::one(), g.id(), rhs.0, rhs.1, rhs.2),
        ],
    }
}

fn prepend(x: Letter, a: &[Letter]) -> Vec<Letter> {
    let mut v = Vec::with_capacity(a.len() + 1);
    v.push(x);
    v.extend_from_slice(a);
    v
}

fn append(a: &[Letter], x: Letter) -> Vec<Letter> {
    let mut v = a.to_vec();
    v.push(x);
    v
}

/// All compositions of inclusion (and the multiplicative variants) with
/// `g̃` a factor of `f̃`.
pub fn inclusion_compositions(
    f: &RewriteRule,
    g: &RewriteRule,
    rules: &RuleSet,
) -> Vec<Composition> {
    let (fw, gw) = (f.word(), g.word());
    let mut out = Vec::new();
    if gw.len() > fw.len() {
        return out;
    }
    for start in 0..=fw.len() - gw.len() {
        if &fw[start..start + gw.len()] != gw {
            continue;
        }
        if f.id() == g.id() && gw.len() == fw.len() {
            continue;
        }
        let a = &fw[..start];
        let b = &fw[start + gw.len()..];
        let pf = f.center();
        if p_set(g, a.len(), b.len()).contains(&pf) {
            out.push(binomial(
                rules,
                CompositionKind::Inclusion,
                f,
                g,
                (&[], &[], pf),
                (a, b, pf),
            ));
        } else if f.is_strong() && g.is_strong() {
            let wl = fw.len() + 1;
            for x in rules.alphabet().letters() {
                let xa = prepend(x, a);
                out.push(binomial(
                    rules,
                    CompositionKind::LeftMultInclusion,
                    f,
                    g,
                    (&[x], &[], 1),
                    (&xa, b, 1),
                ));
                let bx = append(b, x);
                out.push(binomial(
                    rules,
                    CompositionKind::RightMultInclusion,
                    f,
                    g,
                    (&[], &[x], wl),
                    (a, &bx, wl),
                ));
            }
        }
    }
    out
}

/// All compositions of intersection (and the multiplicative variants) for
/// proper overlaps `w = f̃ b = a g̃`.
pub fn intersection_compositions(
    f: &RewriteRule,
    g: &RewriteRule,
    rules: &RuleSet,
) -> Vec<Composition> {
    let (fw, gw) = (f.word(), g.word());
    let mut out = Vec::new();
    for k in 1..fw.len().min(gw.len()) {
        if fw[fw.len() - k..] != gw[..k] {
            continue;
        }
        let a = &fw[..fw.len() - k];
        let b = &gw[k..];
        let pf = p_set(f, 0, b.len());
        let pg = p_set(g, a.len(), 0);
        let common: Vec<usize> = pf.iter().copied().filter(|m| pg.contains(m)).collect();
        if !common.is_empty() {
            for m in common {
                out.push(binomial(
                    rules,
                    CompositionKind::Intersection,
                    f,
                    g,
                    (&[], b, m),
                    (a, &[], m),
                ));
            }
        } else if f.is_strong() && g.is_strong() {
            let wl = a.len() + gw.len() + 1;
            for x in rules.alphabet().letters() {
                let xa = prepend(x, a);
                out.push(binomial(
                    rules,
                    CompositionKind::LeftMultIntersection,
                    f,
                    g,
                    (&[x], b, 1),
                    (&xa, &[], 1),
                ));
                let bx = append(b, x);
                out.push(binomial(
                    rules,
                    CompositionKind::RightMultIntersection,
                    f,
                    g,
                    (&[], &bx, wl),
                    (a, &[x], wl),
                ));
            }
        }
    }
    out
}

/// `x ⊣ f` for every letter `x`; empty when `f` is strong.
pub fn left_multiplication_compositions(f: &RewriteRule, rules: &RuleSet) -> Vec<Composition> {
    if f.is_strong() {
        return Vec::new();
    }
    rules
        .alphabet()
        .letters()
        .map(|x| {
            let sd = SDiword {
                rule: f.id(),
                left: vec![x],
                right: Vec::new(),
                center: 1,
            };
            let value = sd.expand(rules).expect("rule ids come from the set");
            let ambiguity = NormalDiword::new_unchecked(Word::sandwich(&[x], f.word(), &[]), 1);
            Composition {
                kind: CompositionKind::LeftMultiplication,
                ambiguity,
                value,
                f: f.id(),
                g: None,
                expression: vec![(Coefficient::one(), sd)],
            }
        })
        .collect()
}

/// `f ⊢ [u]_{|u|}` for a nonempty `u`.
pub fn right_multiplication(f: &RewriteRule, u: &[Letter], rules: &RuleSet) -> Composition {
    let sd = SDiword {
        rule: f.id(),
        left: Vec::new(),
        right: u.to_vec(),
        center: u.len() + 1,
    };
    let value = sd.expand(rules).expect("rule ids come from the set");
    let ambiguity = NormalDiword::right_ended(Word::sandwich(&[], f.word(), u));
    Composition {
        kind: CompositionKind::RightMultiplication,
        ambiguity,
        value,
        f: f.id(),
        g: None,
        expression: vec![(Coefficient::one(), sd)],
    }
}

/// Every two-rule composition over ordered pairs (including `f` with
/// itself) plus the left multiplications, in a deterministic order.
pub fn all_compositions(rules: &RuleSet, exec: Execution) -> Vec<Composition> {
    let n = rules.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut out = par::flat_map(exec, &pairs, |&(i, j)| {
        let (f, g) = (&rules.rules()[i], &rules.rules()[j]);
        let mut v = inclusion_compositions(f, g, rules);
        v.extend(intersection_compositions(f, g, rules));
        v
    });
    for f in rules.rules() {
        out.extend(left_multiplication_compositions(f, rules));
    }
    out
}

/// Compositions whose pair involves at least one rule with id `>= first_new`.
pub fn compositions_touching(
    rules: &RuleSet,
    first_new: usize,
    exec: Execution,
) -> Vec<Composition> {
    let n = rules.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i >= first_new || j >= first_new)
        .collect();
    let mut out = par::flat_map(exec, &pairs, |&(i, j)| {
        let (f, g) = (&rules.rules()[i], &rules.rules()[j]);
        let mut v = inclusion_compositions(f, g, rules);
        v.extend(intersection_compositions(f, g, rules));
        v
    });
    for f in &rules.rules()[first_new.min(n)..] {
        out.extend(left_multiplication_compositions(f, rules));
    }
    out
}

/// Outcome of reducing a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triviality {
    pub remainder: DiPolynomial,
    pub trace: NormalForm,
    /// Every traced instantiation respects the bound: strictly below the
    /// ambiguity, or for multiplication compositions at most the value's
    /// own leading monomial.
    pub bounded: bool,
}

impl Triviality {
    pub fn is_trivial(&self) -> bool {
        self.remainder.is_zero()
    }
}

pub fn triviality(c: &Composition, rules: &RuleSet) -> Triviality {
    let nf = normal_form(&c.value, rules);
    let order = &**rules.order();
    let bound = if c.kind.is_multiplication() {
        c.value.leading_monomial(order).cloned()
    } else {
        None
    };
    let bounded = nf.trace.iter().all(|(_, occ)| {
        let word = Word::sandwich(&occ.left, rules.rules()[occ.rule].word(), &occ.right);
        let lead = NormalDiword::new_unchecked(word, occ.center);
        match &bound {
            Some(b) => compare(&lead, b, order).is_le(),
            None => compare(&lead, &c.ambiguity, order).is_lt(),
        }
    });
    Triviality {
        remainder: nf.nf.clone(),
        trace: nf,
        bounded,
    }
}

pub fn is_trivial(c: &Composition, rules: &RuleSet) -> bool {
    let t = triviality(c, rules);
    debug_assert!(!t.is_trivial() || t.bounded);
    t.is_trivial()
}

/// Verdict of the right-multiplication analysis for one rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureVerdict {
    /// Every `f ⊢ [u]_{|u|}` reduces to zero.
    Closed,
    /// No counterexample with `|u|` up to the bound, but the obligation
    /// set was still growing there.
    ClosedUpToBound(usize),
    Nontrivial {
        witness: Vec<Letter>,
        residual: DiPolynomial,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub verdict: ClosureVerdict,
    pub obligations: usize,
}

/// Decides whether `f ⊢ [u]_{|u|}` is trivial for every nonempty `u`.
///
/// Obligation `(s, t)` stands for "`s ⊢ [t x u']` reduces to zero for every
/// letter `x` and word `u'`". Discharging it reduces `s ⊢ [t x]`; each
/// non-strong rule `s'` used at right context `b` yields the obligation
/// `(s', b)`, because `[a s' b]_m ⊢ u' = a ⊢ (s' ⊢ [b u'])`. Every
/// dependency consumes one letter of `u`, so a fixpoint proves closure by
/// induction on `|u|`.
///
/// A failed obligation is only a failed sufficient condition; the root is
/// then tested directly on words up to `depth_bound`.
pub fn right_multiplication_closure(
    f: &RewriteRule,
    rules: &RuleSet,
    depth_bound: usize,
) -> Result<ClosureReport> {
    if depth_bound < 1 {
        return Err(Error::InvalidDepthBound);
    }
    if f.is_strong() {
        return Ok(ClosureReport {
            verdict: ClosureVerdict::Closed,
            obligations: 0,
        });
    }
    let letters: Vec<Letter> = rules.alphabet().letters().collect();
    let mut seen: HashSet<(usize, Vec<Letter>)> = HashSet::new();
    let mut queue: VecDeque<(usize, Vec<Letter>, Vec<Letter>)> = VecDeque::new();
    seen.insert((f.id(), Vec::new()));
    queue.push_back((f.id(), Vec::new(), Vec::new()));
    let mut truncated = false;
    while let Some((sid, tail, prefix)) = queue.pop_front() {
        let s = &rules.rules()[sid];
        for &x in &letters {
            let tx = append(&tail, x);
            let nf = normal_form(&right_multiplication(s, &tx, rules).value, rules);
            let path = append(&prefix, x);
            if !nf.nf.is_zero() {
                let verdict = falsify(f, rules, &path, depth_bound, &letters);
                return Ok(ClosureReport {
                    verdict,
                    obligations: seen.len(),
                });
            }
            for (_, occ) in &nf.trace {
                let r = &rules.rules()[occ.rule];
                if r.is_strong() {
                    continue;
                }
                let key = (occ.rule, occ.right.clone());
                if seen.contains(&key) {
                    continue;
                }
                if path.len() >= depth_bound {
                    truncated = true;
                    continue;
                }
                seen.insert(key);
                queue.push_back((occ.rule, occ.right.clone(), path.clone()));
            }
        }
    }
    let verdict = if truncated {
        ClosureVerdict::ClosedUpToBound(depth_bound)
    } else {
        ClosureVerdict::Closed
    };
    Ok(ClosureReport {
        verdict,
        obligations: seen.len(),
    })
}

/// After an obligation fails along `path`: test the root on `path` itself
/// and then exhaustively on every word up to `depth_bound`.
fn falsify(
    f: &RewriteRule,
    rules: &RuleSet,
    path: &[Letter],
    depth_bound: usize,
    letters: &[Letter],
) -> ClosureVerdict {
    let check = |u: &[Letter]| -> Option<ClosureVerdict> {
        let r = reduce(&right_multiplication(f, u, rules).value, rules);
        (!r.is_zero()).then(|| ClosureVerdict::Nontrivial {
            witness: u.to_vec(),
            residual: r,
        })
    };
    if let Some(v) = check(path) {
        return v;
    }
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..depth_bound {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for u in &layer {
            for &x in letters {
                let ux = append(u, x);
                if let Some(v) = check(&ux) {
                    return v;
                }
                next.push(ux);
            }
        }
        layer = next;
    }
    ClosureVerdict::ClosedUpToBound(depth_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::poly::rational;

    fn xn(a: &Alphabet, n: usize, m: usize) -> NormalDiword {
        NormalDiword::new(a.word(&vec!["x"; n].join(" ")).unwrap(), m).unwrap()
    }

    fn fghp() -> RuleSet {
        let a = Alphabet::new(["x"]).unwrap();
        let f = DiPolynomial::monomial(xn(&a, 4, 4));
        let g = DiPolynomial::from_terms([
            (rational(1, 1), xn(&a, 3, 3)),
            (rational(-1, 2), xn(&a, 3, 2)),
            (rational(-1, 2), xn(&a, 3, 1)),
        ]);
        let h = DiPolynomial::from_terms([
            (rational(1, 1), xn(&a, 4, 3)),
            (rational(1, 1), xn(&a, 4, 2)),
        ]);
        let p = DiPolynomial::from_terms([
            (rational(1, 1), xn(&a, 4, 2)),
            (rational(1, 3), xn(&a, 4, 1)),
        ]);
        let mut s = RuleSet::new(a);
        for (n, q) in [("f", f), ("g", g), ("h", h), ("p", p)] {
            s.push_named(n, q).unwrap();
        }
        s
    }

    #[test]
    fn inclusion_of_g_in_f_gives_half_h() {
        let s = fghp();
        let a = s.alphabet().clone();
        let (f, g, h) = (&s.rules()[0], &s.rules()[1], &s.rules()[2]);
        let c = inclusion_compositions(f, g, &s);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].ambiguity, xn(&a, 4, 4));
        assert_eq!(c[0].value, h.poly().scale(&rational(1, 2)));
        assert_eq!(c[0].expression_value(&s).unwrap(), c[0].value);

        let c = inclusion_compositions(h, g, &s);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].ambiguity, xn(&a, 4, 3));
        assert_eq!(c[0].value, s.rules()[3].poly().scale(&rational(3, 2)));
    }

    #[test]
    fn intersection_examples() {
        let s = fghp();
        let a = s.alphabet().clone();
        let (f, g, p) = (&s.rules()[0], &s.rules()[1], &s.rules()[3]);
        let ff: Vec<_> = intersection_compositions(f, f, &s)
            .into_iter()
            .map(|c| c.ambiguity)
            .collect();
        assert_eq!(ff, vec![xn(&a, 7, 7), xn(&a, 6, 6), xn(&a, 5, 5)]);
        assert!(intersection_compositions(g, g, &s).is_empty());
        let pf: Vec<_> = intersection_compositions(p, f, &s)
            .into_iter()
            .map(|c| c.ambiguity)
            .collect();
        assert_eq!(pf, vec![xn(&a, 7, 2), xn(&a, 6, 2)]);
    }

    #[test]
    fn left_multiplications() {
        let s = fghp();
        let a = s.alphabet().clone();
        let lg = left_multiplication_compositions(&s.rules()[1], &s);
        assert!(lg[0].value.is_zero());
        let lh = left_multiplication_compositions(&s.rules()[2], &s);
        assert_eq!(
            lh[0].value,
            DiPolynomial::term(rational(2, 1), xn(&a, 5, 1))
        );
        assert!(left_multiplication_compositions(&s.rules()[0], &s).is_empty());
    }

    #[test]
    fn closure_of_g_is_exact() {
        let s = fghp();
        for id in 1..4 {
            let r = right_multiplication_closure(&s.rules()[id], &s, 8).unwrap();
            assert_eq!(r.verdict, ClosureVerdict::Closed, "rule {id}");
        }
        assert_eq!(
            right_multiplication_closure(&s.rules()[1], &s, 0),
            Err(Error::InvalidDepthBound)
        );
    }
}
