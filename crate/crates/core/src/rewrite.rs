//! Normal S-diwords, reduction to normal form and Irr(S).

use std::fmt;

use num_traits::One;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::diword::NormalDiword;
use crate::error::{Error, Result};
use crate::order::compare;
use crate::par::{self, Execution};
use crate::poly::{Coefficient, DiPolynomial};
use crate::rules::{RewriteRule, RuleSet};

/// Admissible centers `P([asb])` for contexts of the given lengths, ascending.
pub fn p_set(s: &RewriteRule, left_len: usize, right_len: usize) -> Vec<usize> {
    let w = s.word().len();
    let mid = left_len + s.center();
    if s.is_strong() {
        (1..=left_len)
            .chain(std::iter::once(mid))
            .chain(left_len + w + 1..=left_len + w + right_len)
            .collect()
    } else {
        vec![mid]
    }
}

pub fn is_admissible(s: &RewriteRule, left_len: usize, right_len: usize, m: usize) -> bool {
    let w = s.word().len();
    if m == left_len + s.center() {
        return true;
    }
    s.is_strong() && (m >= 1 && m <= left_len || m > left_len + w && m <= left_len + w + right_len)
}

/// A normal s-diword `[asb]_m`: rule id, contexts and the center of its
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    pub rule: usize,
    pub left: Vec<Letter>,
    pub right: Vec<Letter>,
    pub center: usize,
}

impl Occurrence {
    pub fn instantiate(&self, rules: &RuleSet) -> Result<DiPolynomial> {
        instantiate(rules.get(self.rule)?, &self.left, &self.right, self.center)
    }

    /// The same diword written as a general S-diword.
    pub fn to_sdiword(&self, rules: &RuleSet) -> Result<SDiword> {
        let s = rules.get(self.rule)?;
        let a = self.left.len();
        let slot = if self.center <= a {
            self.center
        } else if self.center == a + s.center() {
            a + 1
        } else {
            self.center - s.word().len() + 1
        };
        Ok(SDiword {
            rule: self.rule,
            left: self.left.clone(),
            right: self.right.clone(),
            center: slot,
        })
    }

    pub fn display<'a>(&'a self, rules: &'a RuleSet) -> impl fmt::Display + 'a {
        DisplayOcc { occ: self, rules }
    }
}

struct DisplayOcc<'a> {
    occ: &'a Occurrence,
    rules: &'a RuleSet,
}

impl fmt::Display for DisplayOcc<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self
            .rules
            .get(self.occ.rule)
            .map(|r| r.name().to_string())
            .unwrap_or_else(|_| format!("#{}", self.occ.rule));
        write_context(
            f,
            self.rules.alphabet(),
            &self.occ.left,
            &name,
            &self.occ.right,
        )?;
        write!(f, " @ {}]", self.occ.center)
    }
}

fn write_context(
    f: &mut fmt::Formatter<'_>,
    alphabet: &Alphabet,
    left: &[Letter],
    name: &str,
    right: &[Letter],
) -> fmt::Result {
    write!(f, "[")?;
    if !left.is_empty() {
        write!(f, "{} ", alphabet.render(left))?;
    }
    write!(f, "({name})")?;
    if !right.is_empty() {
        write!(f, " {}", alphabet.render(right))?;
    }
    Ok(())
}

/// `[asb]_m` for an admissible `m`, expanded term by term.
pub fn instantiate(s: &RewriteRule, a: &[Letter], b: &[Letter], m: usize) -> Result<DiPolynomial> {
    if !is_admissible(s, a.len(), b.len(), m) {
        return Err(Error::InadmissibleCenter {
            rule: s.id(),
            left: a.len(),
            right: b.len(),
            center: m,
        });
    }
    let w = s.word().len();
    let mut out = DiPolynomial::zero();
    for (d, c) in s.poly().iter() {
        let center = if m <= a.len() {
            m
        } else if m == a.len() + s.center() {
            a.len() + d.center()
        } else {
            m - w + d.len()
        };
        let word = Word::sandwich(a, d.letters(), b);
        out.add_term(NormalDiword::new_unchecked(word, center), c.clone());
    }
    Ok(out)
}

/// A general S-diword: the rule sits in slot `|a|+1` of a word over X ∪ S
/// whose center is `center` (1-based, at most `|a|+|b|+1`). Normal when the
/// center is the rule slot or the rule is strong.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SDiword {
    pub rule: usize,
    pub left: Vec<Letter>,
    pub right: Vec<Letter>,
    pub center: usize,
}

impl SDiword {
    pub fn is_normal(&self, rules: &RuleSet) -> Result<bool> {
        Ok(self.center == self.left.len() + 1 || rules.get(self.rule)?.is_strong())
    }

    /// Expands the diword via the two products; valid for every center.
    pub fn expand(&self, rules: &RuleSet) -> Result<DiPolynomial> {
        let s = rules.get(self.rule)?;
        let a = self.left.len();
        if self.center == 0 || self.center > a + self.right.len() + 1 {
            return Err(Error::CenterOutOfRange {
                center: self.center,
                len: a + self.right.len() + 1,
            });
        }
        let mut out = DiPolynomial::zero();
        for (d, c) in s.poly().iter() {
            let center = if self.center <= a {
                self.center
            } else if self.center == a + 1 {
                a + d.center()
            } else {
                a + d.len() + (self.center - a - 1)
            };
            let word = Word::sandwich(&self.left, d.letters(), &self.right);
            out.add_term(NormalDiword::new_unchecked(word, center), c.clone());
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, rules: &'a RuleSet) -> impl fmt::Display + 'a {
        DisplaySd { sd: self, rules }
    }
}

struct DisplaySd<'a> {
    sd: &'a SDiword,
    rules: &'a RuleSet,
}

impl fmt::Display for DisplaySd<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self
            .rules
            .get(self.sd.rule)
            .map(|r| r.name().to_string())
            .unwrap_or_else(|_| format!("#{}", self.sd.rule));
        write_context(
            f,
            self.rules.alphabet(),
            &self.sd.left,
            &name,
            &self.sd.right,
        )?;
        write!(f, " @@ {}]", self.sd.center)
    }
}

/// A deterministic occurrence of a normal S-diword whose leading monomial
/// is `t`: smallest left context first, then smallest rule id.
pub fn find_occurrence(t: &NormalDiword, rules: &RuleSet) -> Option<Occurrence> {
    let letters = t.letters();
    let n = letters.len();
    let m = t.center();
    for start in 0..n {
        let mut best: Option<usize> = None;
        for &len in rules.word_lengths() {
            if start + len > n {
                break;
            }
            for &id in rules.rules_with_word(&letters[start..start + len]) {
                if best.is_some_and(|b| b <= id) {
                    break;
                }
                let s = &rules.rules()[id];
                if is_admissible(s, start, n - start - len, m) {
                    best = Some(id);
                    break;
                }
            }
        }
        if let Some(id) = best {
            let len = rules.rules()[id].word().len();
            return Some(Occurrence {
                rule: id,
                left: letters[..start].to_vec(),
                right: letters[start + len..].to_vec(),
                center: m,
            });
        }
    }
    None
}

pub fn is_irreducible(t: &NormalDiword, rules: &RuleSet) -> bool {
    find_occurrence(t, rules).is_none()
}

/// Result of `normal_form`: `f - nf = Σ c · instantiate(occurrence)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub nf: DiPolynomial,
    pub trace: Vec<(Coefficient, Occurrence)>,
}

impl NormalForm {
    /// `Σ c · instantiate(occurrence)` over the trace.
    pub fn traced_sum(&self, rules: &RuleSet) -> Result<DiPolynomial> {
        let mut sum = DiPolynomial::zero();
        for (c, occ) in &self.trace {
            sum.add_scaled(c, &occ.instantiate(rules)?);
        }
        Ok(sum)
    }
}

fn pop_greatest(rest: &mut DiPolynomial, rules: &RuleSet) -> Option<(NormalDiword, Coefficient)> {
    let order = &**rules.order();
    let d = if order.is_deglex() {
        rest.iter().next_back()?.0.clone()
    } else {
        rest.iter()
            .max_by(|a, b| compare(a.0, b.0, order))?
            .0
            .clone()
    };
    let c = rest.remove(&d)?;
    Some((d, c))
}

fn reduce_impl(
    f: &DiPolynomial,
    rules: &RuleSet,
    mut trace: Option<&mut Vec<(Coefficient, Occurrence)>>,
) -> DiPolynomial {
    let mut rest = f.clone();
    let mut nf = DiPolynomial::zero();
    while let Some((t, c)) = pop_greatest(&mut rest, rules) {
        match find_occurrence(&t, rules) {
            None => nf.add_term(t, c),
            Some(occ) => {
                let s = &rules.rules()[occ.rule];
                let inst = instantiate(s, &occ.left, &occ.right, occ.center)
                    .expect("occurrences are admissible by construction");
                debug_assert!(inst.coeff(&t).is_one());
                for (d, k) in inst.iter() {
                    if d != &t {
                        rest.add_term(d.clone(), -(&c * k));
                    }
                }
                if let Some(trace) = trace.as_deref_mut() {
                    trace.push((c, occ));
                }
            }
        }
    }
    nf
}

/// Reduces `f` modulo `rules`, always rewriting the greatest reducible term.
pub fn normal_form(f: &DiPolynomial, rules: &RuleSet) -> NormalForm {
    let mut trace = Vec::new();
    let nf = reduce_impl(f, rules, Some(&mut trace));
    NormalForm { nf, trace }
}

/// `normal_form` without recording the trace.
pub fn reduce(f: &DiPolynomial, rules: &RuleSet) -> DiPolynomial {
    reduce_impl(f, rules, None)
}

/// Every irreducible diword of word length at most `max_len`, ascending.
pub fn enumerate_irr(rules: &RuleSet, max_len: usize) -> Vec<NormalDiword> {
    enumerate_irr_with(rules, max_len, Execution::default())
}

pub fn enumerate_irr_with(rules: &RuleSet, max_len: usize, exec: Execution) -> Vec<NormalDiword> {
    let alphabet = rules.alphabet();
    let mut out = Vec::new();
    for len in 1..=max_len {
        let words = alphabet.words_of_len(len);
        out.extend(par::flat_map(exec, &words, |w| {
            (1..=len)
                .map(|m| NormalDiword::new_unchecked(w.clone(), m))
                .filter(|d| is_irreducible(d, rules))
                .collect()
        }));
    }
    let order = &**rules.order();
    if !order.is_deglex() {
        out.sort_by(|a, b| compare(a, b, order));
    }
    out
}

/// Every diword of length at most `max_len`, ascending in deg-lex-center order.
pub fn all_diwords(alphabet: &Alphabet, max_len: usize) -> Vec<NormalDiword> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for w in alphabet.words_of_len(len) {
            for m in 1..=len {
                out.push(NormalDiword::new_unchecked(w.clone(), m));
            }
        }
    }
    out
}
