//! Disemigroups presented by relations `[u]_m = [v]_n`, and the four
//! classical varieties with closed-form normal forms.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::One;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::completion::{check_gs, complete, reduce_basis, CheckConfig, Verdict};
use crate::diword::NormalDiword;
use crate::error::{Error, Result};
use crate::poly::{Coefficient, DiPolynomial};
use crate::rewrite::{enumerate_irr, reduce};
use crate::rules::RuleSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Commutative,
    Abelian,
    LeftCommutative,
    RightCommutative,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Commutative,
        Family::Abelian,
        Family::LeftCommutative,
        Family::RightCommutative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Commutative => "commutative",
            Family::Abelian => "abelian",
            Family::LeftCommutative => "left-commutative",
            Family::RightCommutative => "right-commutative",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn sorted(letters: &[Letter]) -> Vec<Letter> {
    let mut v = letters.to_vec();
    v.sort_unstable();
    v
}

fn diword(letters: Vec<Letter>, center: usize) -> NormalDiword {
    NormalDiword::new_unchecked(Word::new(letters).expect("nonempty"), center)
}

/// `⌊u⌋`: the letters of `u` in increasing order.
pub fn sort_word(u: &Word) -> Word {
    u.sorted()
}

/// Letter multiplicities of `u`.
pub fn cont(u: &[Letter]) -> BTreeMap<Letter, usize> {
    let mut out = BTreeMap::new();
    for &x in u {
        *out.entry(x).or_insert(0) += 1;
    }
    out
}

/// `ρ_u(m)`: the letter at position `m`.
pub fn rho(u: &[Letter], m: usize) -> Letter {
    u[m - 1]
}

/// `λ_w(x)`: first position of `x` in the sorted word `w`.
pub fn lambda(w: &[Letter], x: Letter) -> Option<usize> {
    w.iter().position(|&y| y == x).map(|p| p + 1)
}

/// `τ_u(m) = λ_{⌊u⌋}(ρ_u(m))`.
pub fn tau(u: &[Letter], m: usize) -> usize {
    assert!(m >= 1 && m <= u.len(), "center {m} out of range");
    let x = rho(u, m);
    // the number of smaller letters fixes the block start without sorting
    cont(u).range(..x).map(|(_, k)| k).sum::<usize>() + 1
}

/// The canonical representative of the class of `d` in the free object of
/// `family`.
pub fn closed_form_nf(family: Family, d: &NormalDiword) -> NormalDiword {
    let u = d.letters();
    let (n, m) = (u.len(), d.center());
    match family {
        Family::Commutative => {
            let center = if n == 2 { m } else { 1 };
            diword(sorted(u), center)
        }
        Family::Abelian => diword(sorted(u), tau(u, m)),
        Family::LeftCommutative => {
            if n - m <= 1 {
                let mut w = sorted(&u[..m - 1]);
                w.extend_from_slice(&u[m - 1..]);
                diword(w, m)
            } else {
                let mut w = sorted(&u[..n - 1]);
                w.push(u[n - 1]);
                diword(w, 1)
            }
        }
        Family::RightCommutative => closed_form_nf(Family::LeftCommutative, &d.mirror()).mirror(),
    }
}

/// Right-hand side of the defining schema at `[u]_m`, if the schema has a
/// member with that leading diword.
fn schema_rhs(family: Family, d: &NormalDiword) -> Option<NormalDiword> {
    let u = d.letters();
    let (n, m) = (u.len(), d.center());
    if n < 2 {
        return None;
    }
    let rhs = match family {
        Family::Commutative | Family::Abelian => closed_form_nf(family, d),
        Family::LeftCommutative => {
            if n - m >= 2 {
                // [u x v y]_{|u|+1} -> [sort(u x v) y]_1 with |v| >= 1
                let mut w = sorted(&u[..n - 1]);
                w.push(u[n - 1]);
                diword(w, 1)
            } else if m >= 3 {
                let mut w = sorted(&u[..m - 1]);
                w.extend_from_slice(&u[m - 1..]);
                diword(w, m)
            } else {
                return None;
            }
        }
        Family::RightCommutative => {
            if m <= 2 && n - m >= 2 {
                let mut w = u[..m].to_vec();
                w.extend(sorted(&u[m..]));
                diword(w, m)
            } else if m >= 3 {
                let mut w = vec![u[0]];
                w.extend(sorted(&u[1..]));
                diword(w, 3)
            } else {
                return None;
            }
        }
    };
    (rhs != *d).then_some(rhs)
}

fn binomial(lhs: NormalDiword, rhs: NormalDiword) -> DiPolynomial {
    DiPolynomial::from_terms([(Coefficient::one(), lhs), (-Coefficient::one(), rhs)])
}

/// Every member of the defining schema whose leading word has at most
/// `bound` letters, in increasing order of leading diword.
pub fn family_rules(family: Family, alphabet: &Alphabet, bound: usize) -> Result<RuleSet> {
    let mut rules = RuleSet::new(alphabet.clone());
    for len in 2..=bound {
        for w in alphabet.words_of_len(len) {
            for m in 1..=len {
                let d = NormalDiword::new_unchecked(w.clone(), m);
                if let Some(rhs) = schema_rhs(family, &d) {
                    rules.push(binomial(d, rhs))?;
                }
            }
        }
    }
    Ok(rules)
}

/// The finite generating set of short relations. For the first three
/// families this is the reduced basis of the schema; for the right
/// commutative family it is the candidate set under audit.
pub fn family_reduced(family: Family, alphabet: &Alphabet) -> Result<RuleSet> {
    let letters: Vec<Letter> = alphabet.letters().rev().collect();
    let mut out: Vec<(NormalDiword, NormalDiword)> = Vec::new();
    let pairs = || {
        letters.iter().flat_map(|&i| {
            letters
                .iter()
                .filter(move |&&j| i > j)
                .map(move |&j| (i, j))
        })
    };
    let d = |w: &[Letter], m: usize| diword(w.to_vec(), m);
    match family {
        Family::Commutative => {
            for (i, j) in pairs() {
                out.push((d(&[i, j], 2), d(&[j, i], 2)));
                out.push((d(&[i, j], 1), d(&[j, i], 1)));
            }
            for w in alphabet.words_of_len(3) {
                if w.letters() == sorted(&w).as_slice() {
                    out.push((d(&w, 2), d(&w, 1)));
                    out.push((d(&w, 3), d(&w, 1)));
                }
            }
        }
        Family::Abelian => {
            for (i, j) in pairs() {
                out.push((d(&[i, j], 2), d(&[j, i], 1)));
                out.push((d(&[i, j], 1), d(&[j, i], 2)));
            }
            for &i in &letters {
                out.push((d(&[i, i], 2), d(&[i, i], 1)));
            }
        }
        Family::LeftCommutative => {
            for (i, j) in pairs() {
                for &t in &letters {
                    out.push((d(&[i, j, t], 3), d(&[j, i, t], 3)));
                    out.push((d(&[i, j, t], 1), d(&[j, i, t], 1)));
                }
            }
            for w in alphabet.words_of_len(4) {
                let (l, i, j, t) = (w[0], w[1], w[2], w[3]);
                if i <= j {
                    let mut rhs = sorted(&[l, i, j]);
                    rhs.push(t);
                    out.push((d(&w, 2), d(&rhs, 1)));
                }
            }
        }
        Family::RightCommutative => {
            for (i, j) in pairs() {
                for &t in &letters {
                    out.push((d(&[t, i, j], 1), d(&[t, j, i], 1)));
                    out.push((d(&[t, i, j], 3), d(&[t, j, i], 3)));
                }
            }
            for w in alphabet.words_of_len(4) {
                let (t, i, j) = (w[0], w[1], w[2]);
                if i <= j {
                    let mut rhs = vec![t];
                    rhs.extend(sorted(&w[1..]));
                    let rhs = d(&rhs, 3);
                    if rhs != d(&w, 3) {
                        out.push((d(&w, 3), rhs));
                    }
                }
            }
        }
    }
    let mut rules = RuleSet::new(alphabet.clone());
    for (lhs, rhs) in out {
        rules.push(binomial(lhs, rhs))?;
    }
    Ok(rules)
}

/// The normal-form set of the free object written out directly, every
/// diword of length at most `max_len`, increasing. For the right
/// commutative family this is the candidate set under audit.
pub fn normal_form_set(family: Family, alphabet: &Alphabet, max_len: usize) -> Vec<NormalDiword> {
    let is_sorted = |w: &[Letter]| w.windows(2).all(|p| p[0] <= p[1]);
    let mut out = Vec::new();
    for len in 1..=max_len {
        for w in alphabet.words_of_len(len) {
            for m in 1..=len {
                let keep = match family {
                    Family::Commutative => is_sorted(&w) && (m == 1 || len == 2),
                    Family::Abelian => is_sorted(&w) && (m == 1 || w[m - 2] < w[m - 1]),
                    Family::LeftCommutative => {
                        (m == 1 && is_sorted(&w[..len - 1]))
                            || (len - m <= 1 && is_sorted(&w[..m - 1]))
                    }
                    Family::RightCommutative => {
                        (m <= 2 && is_sorted(&w[m..])) || (m == 3 && len >= 3 && is_sorted(&w[1..]))
                    }
                };
                if keep {
                    out.push(NormalDiword::new_unchecked(w.clone(), m));
                }
            }
        }
    }
    out
}

/// `a ⊢ b` in the free commutative disemigroup, on normal forms.
pub fn commutative_right_product(a: &NormalDiword, b: &NormalDiword) -> NormalDiword {
    let w = sorted(&[a.letters(), b.letters()].concat());
    let center = if a.len() * b.len() > 1 { 1 } else { 2 };
    diword(w, center)
}

/// `a ⊣ b` in the free commutative disemigroup, on normal forms.
pub fn commutative_left_product(a: &NormalDiword, b: &NormalDiword) -> NormalDiword {
    diword(sorted(&[a.letters(), b.letters()].concat()), 1)
}

/// `a ⊢ b` in the free abelian disemigroup, on normal forms.
pub fn abelian_right_product(a: &NormalDiword, b: &NormalDiword) -> NormalDiword {
    let vu = [b.letters(), a.letters()].concat();
    diword(sorted(&vu), tau(&vu, b.center()))
}

/// `a ⊣ b` in the free abelian disemigroup, on normal forms.
pub fn abelian_left_product(a: &NormalDiword, b: &NormalDiword) -> NormalDiword {
    let uv = [a.letters(), b.letters()].concat();
    diword(sorted(&uv), tau(&uv, a.center()))
}

#[derive(Clone, Copy, Debug)]
enum Mode {
    Complete,
    Schema { bound: usize },
}

/// A finitely presented disemigroup. Normal forms come from a completed
/// binomial rule set, computed once on first use.
#[derive(Debug)]
pub struct Presentation {
    rules: RuleSet,
    mode: Mode,
    cfg: CheckConfig,
    solved: OnceLock<Result<RuleSet>>,
}

impl Presentation {
    /// Orients every relation so the greater side is rewritten.
    pub fn new<I>(alphabet: Alphabet, relations: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NormalDiword, NormalDiword)>,
    {
        let mut rules = RuleSet::new(alphabet.clone());
        for (lhs, rhs) in relations {
            if lhs == rhs {
                return Err(Error::TrivialRelation(format!(
                    "{} = {}",
                    lhs.display(&alphabet),
                    rhs.display(&alphabet)
                )));
            }
            let (big, small) = if lhs > rhs { (lhs, rhs) } else { (rhs, lhs) };
            rules.push(binomial(big, small))?;
        }
        Ok(Self::from_rules(rules))
    }

    pub fn from_rules(rules: RuleSet) -> Self {
        Presentation {
            rules,
            mode: Mode::Complete,
            cfg: CheckConfig::default(),
            solved: OnceLock::new(),
        }
    }

    /// The short generating relations of `family`.
    pub fn family(family: Family, alphabet: &Alphabet) -> Result<Self> {
        Ok(Self::from_rules(family_reduced(family, alphabet)?))
    }

    /// The schema of `family` instantiated up to `bound` letters. The schema
    /// is used as-is, and queries must fit strictly inside the bound.
    pub fn schema(family: Family, alphabet: &Alphabet, bound: usize) -> Result<Self> {
        let rules = family_rules(family, alphabet, bound)?;
        Ok(Presentation {
            rules,
            mode: Mode::Schema { bound },
            cfg: CheckConfig::default(),
            solved: OnceLock::new(),
        })
    }

    pub fn with_config(mut self, cfg: CheckConfig) -> Self {
        self.cfg = cfg;
        self.solved = OnceLock::new();
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.rules.alphabet()
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    /// The rule set normal forms are computed against.
    pub fn solved(&self) -> Result<&RuleSet> {
        self.solved
            .get_or_init(|| match self.mode {
                Mode::Schema { .. } => Ok(self.rules.clone()),
                Mode::Complete => {
                    let done = complete(&self.rules, &self.cfg)?;
                    if !done.is_complete() {
                        return Err(Error::FuelExhausted {
                            added: done.log.len(),
                        });
                    }
                    Ok(done.basis)
                }
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn nf(&self, d: &NormalDiword) -> Result<NormalDiword> {
        if let Mode::Schema { bound } = self.mode {
            if d.len() + 1 > bound {
                return Err(Error::BoundExceeded {
                    len: d.len(),
                    needed: d.len() + 1,
                    bound,
                });
            }
        }
        let basis = self.solved()?;
        let r = reduce(&DiPolynomial::monomial(d.clone()), basis);
        let mut terms = r.iter();
        match (terms.next(), terms.next()) {
            (Some((t, c)), None) if c.is_one() => Ok(t.clone()),
            _ => Err(Error::NonMonomialNormalForm(
                r.display(self.alphabet()).to_string(),
            )),
        }
    }

    pub fn word_problem(&self, a: &NormalDiword, b: &NormalDiword) -> Result<bool> {
        Ok(self.nf(a)? == self.nf(b)?)
    }
}

/// Outcome of checking the short right commutative relations.
#[derive(Clone, Debug)]
pub struct RightCommutativeAudit {
    pub alphabet: Alphabet,
    pub max_len: usize,
    pub verdict: Verdict,
    /// Irreducible diwords of the candidate relations.
    pub irr: Vec<NormalDiword>,
    /// Mirror images of the left commutative normal forms.
    pub mirrored: Vec<NormalDiword>,
    /// The candidate normal-form set written out directly.
    pub listed: Vec<NormalDiword>,
    /// Reduced basis of the schema instantiated one letter past `max_len`.
    pub schema_basis: RuleSet,
    /// Members of `schema_basis` absent from the candidate relations.
    pub missing_rules: Vec<DiPolynomial>,
    /// Candidate relations absent from `schema_basis`.
    pub extra_rules: Vec<DiPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuditOutcome {
    Consistent,
    Discrepancy(Vec<String>),
}

impl RightCommutativeAudit {
    fn counts(set: &[NormalDiword], max_len: usize) -> Vec<usize> {
        (1..=max_len)
            .map(|n| set.iter().filter(|d| d.len() == n).count())
            .collect()
    }

    pub fn outcome(&self) -> AuditOutcome {
        let mut issues = Vec::new();
        if self.verdict == Verdict::NotGS {
            issues.push("the candidate relations are not a Gröbner-Shirshov basis".to_string());
        }
        let irr: BTreeSet<_> = self.irr.iter().collect();
        let listed: BTreeSet<_> = self.listed.iter().collect();
        let irr_counts = Self::counts(&self.irr, self.max_len);
        let mirror_counts = Self::counts(&self.mirrored, self.max_len);
        if irr_counts != mirror_counts {
            issues.push(format!(
                "irreducible counts {irr_counts:?} differ from mirrored counts {mirror_counts:?}"
            ));
        }
        if !self.missing_rules.is_empty() {
            issues.push(format!(
                "the reduced schema basis has {} relations the candidate lacks, e.g. {}",
                self.missing_rules.len(),
                self.missing_rules[0].display(&self.alphabet)
            ));
        }
        if !self.extra_rules.is_empty() {
            issues.push(format!(
                "{} candidate relations are not in the reduced schema basis",
                self.extra_rules.len()
            ));
        }
        if irr != listed {
            let show = |set: Vec<&&NormalDiword>| {
                if set.is_empty() {
                    return "0".to_string();
                }
                let sample: Vec<_> = set
                    .iter()
                    .take(4)
                    .map(|d| d.display(&self.alphabet).to_string())
                    .collect();
                format!("{} (e.g. {})", set.len(), sample.join(", "))
            };
            let extra: Vec<_> = irr.difference(&listed).collect();
            let missing: Vec<_> = listed.difference(&irr).collect();
            issues.push(format!(
                "irreducible set differs from the listed set: {} only irreducible, {} only listed",
                show(extra),
                show(missing),
            ));
        }
        if issues.is_empty() {
            AuditOutcome::Consistent
        } else {
            AuditOutcome::Discrepancy(issues)
        }
    }
}

impl fmt::Display for RightCommutativeAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "right-commutative audit over {} letters up to length {}",
            self.alphabet.len(),
            self.max_len
        )?;
        writeln!(f, "  verdict: {:?}", self.verdict)?;
        writeln!(
            f,
            "  irreducible per length: {:?}",
            Self::counts(&self.irr, self.max_len)
        )?;
        writeln!(
            f,
            "  mirrored per length:    {:?}",
            Self::counts(&self.mirrored, self.max_len)
        )?;
        writeln!(
            f,
            "  listed per length:      {:?}",
            Self::counts(&self.listed, self.max_len)
        )?;
        let schema_irr = enumerate_irr(&self.schema_basis, self.max_len);
        writeln!(
            f,
            "  schema basis per length: {:?}",
            Self::counts(&schema_irr, self.max_len)
        )?;
        match self.outcome() {
            AuditOutcome::Consistent => write!(f, "  outcome: consistent"),
            AuditOutcome::Discrepancy(issues) => {
                write!(f, "  outcome: discrepancy")?;
                for i in issues {
                    write!(f, "\n    - {i}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn audit_right_commutative(
    alphabet: &Alphabet,
    max_len: usize,
    cfg: &CheckConfig,
) -> Result<RightCommutativeAudit> {
    let rules = family_reduced(Family::RightCommutative, alphabet)?;
    let verdict = check_gs(&rules, cfg)?.verdict;
    let schema = family_rules(Family::RightCommutative, alphabet, max_len + 1)?;
    let schema_basis = reduce_basis(&schema, cfg)?.basis;
    let ours: HashSet<&DiPolynomial> = rules.polys().collect();
    let theirs: HashSet<&DiPolynomial> = schema_basis.polys().collect();
    let missing_rules = schema_basis
        .polys()
        .filter(|p| !ours.contains(p))
        .cloned()
        .collect();
    let extra_rules = rules
        .polys()
        .filter(|p| !theirs.contains(p))
        .cloned()
        .collect();
    let irr = enumerate_irr(&rules, max_len);
    let mut mirrored: Vec<_> = normal_form_set(Family::LeftCommutative, alphabet, max_len)
        .iter()
        .map(NormalDiword::mirror)
        .collect();
    mirrored.sort();
    Ok(RightCommutativeAudit {
        alphabet: alphabet.clone(),
        max_len,
        verdict,
        irr,
        mirrored,
        listed: normal_form_set(Family::RightCommutative, alphabet, max_len),
        schema_basis,
        missing_rules,
        extra_rules,
    })
}
