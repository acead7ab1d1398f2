//! Monic rewrite rules and rule sets.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::order::{deglex, SharedOrder};
use crate::poly::{DiPolynomial, LeadingData};

/// A monic polynomial together with its cached leading data.
#[derive(Clone, PartialEq, Eq)]
pub struct RewriteRule {
    id: usize,
    name: String,
    poly: DiPolynomial,
    lead: LeadingData,
}

impl RewriteRule {
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn poly(&self) -> &DiPolynomial {
        &self.poly
    }

    pub fn lead(&self) -> &LeadingData {
        &self.lead
    }

    pub fn word(&self) -> &[Letter] {
        self.lead.assoc_word.letters()
    }

    /// `p(s̄)`, the center of the leading monomial.
    pub fn center(&self) -> usize {
        self.lead.leading.center()
    }

    pub fn is_strong(&self) -> bool {
        self.lead.strong
    }
}

impl fmt::Debug for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}: {:?}", self.name, self.id, self.poly)
    }
}

/// An ordered list of monic rules over a fixed alphabet and word order.
/// Rule ids are list positions.
#[derive(Clone)]
pub struct RuleSet {
    alphabet: Alphabet,
    order: SharedOrder,
    rules: Vec<RewriteRule>,
    by_word: HashMap<Vec<Letter>, Vec<usize>>,
    lengths: Vec<usize>,
}

impl RuleSet {
    pub fn new(alphabet: Alphabet) -> Self {
        Self::with_order(alphabet, deglex())
    }

    pub fn with_order(alphabet: Alphabet, order: SharedOrder) -> Self {
        RuleSet {
            alphabet,
            order,
            rules: Vec::new(),
            by_word: HashMap::new(),
            lengths: Vec::new(),
        }
    }

    /// Builds a set from unnamed polynomials; rule `i` is named `s{i}`.
    pub fn from_polys<I>(alphabet: Alphabet, polys: I) -> Result<Self>
    where
        I: IntoIterator<Item = DiPolynomial>,
    {
        let mut set = Self::new(alphabet);
        for p in polys {
            set.push(p)?;
        }
        Ok(set)
    }

    /// Adds `poly` made monic under an automatic name. Returns the new id.
    pub fn push(&mut self, poly: DiPolynomial) -> Result<usize> {
        let name = format!("s{}", self.rules.len());
        self.push_named(name, poly)
    }

    pub fn push_named(&mut self, name: impl Into<String>, poly: DiPolynomial) -> Result<usize> {
        for d in poly.support() {
            if let Some(&l) = d.letters().iter().find(|l| !self.alphabet.contains(**l)) {
                return Err(Error::LetterOutOfRange(l.0));
            }
        }
        let poly = poly.monic(&*self.order)?;
        let lead = poly.leading_data(&*self.order)?;
        let id = self.rules.len();
        let word = lead.assoc_word.letters().to_vec();
        if let Err(pos) = self.lengths.binary_search(&word.len()) {
            self.lengths.insert(pos, word.len());
        }
        self.by_word.entry(word).or_default().push(id);
        self.rules.push(RewriteRule {
            id,
            name: name.into(),
            poly,
            lead,
        });
        Ok(id)
    }

    /// A fresh set with the same alphabet and order containing `polys`
    /// under the given names.
    pub fn rebuild<I, S>(&self, named: I) -> Result<RuleSet>
    where
        I: IntoIterator<Item = (S, DiPolynomial)>,
        S: Into<String>,
    {
        let mut set = RuleSet::with_order(self.alphabet.clone(), self.order.clone());
        for (name, p) in named {
            set.push_named(name, p)?;
        }
        Ok(set)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &SharedOrder {
        &self.order
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn get(&self, id: usize) -> Result<&RewriteRule> {
        self.rules.get(id).ok_or(Error::UnknownRule(id))
    }

    pub fn polys(&self) -> impl Iterator<Item = &DiPolynomial> + '_ {
        self.rules.iter().map(RewriteRule::poly)
    }

    /// Ids of rules whose leading word is exactly `word`, ascending.
    pub fn rules_with_word(&self, word: &[Letter]) -> &[usize] {
        self.by_word.get(word).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Distinct leading-word lengths, ascending.
    pub fn word_lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn max_word_len(&self) -> usize {
        self.rules
            .iter()
            .map(|r| r.poly.max_len())
            .max()
            .unwrap_or(0)
    }

    /// True when both sets hold the same polynomials in the same order.
    pub fn same_polys(&self, other: &RuleSet) -> bool {
        self.rules.len() == other.rules.len()
            && self.polys().zip(other.polys()).all(|(a, b)| a == b)
    }

    /// True when both sets hold the same polynomials, in any order.
    pub fn same_poly_set(&self, other: &RuleSet) -> bool {
        let mine: HashSet<&DiPolynomial> = self.polys().collect();
        let theirs: HashSet<&DiPolynomial> = other.polys().collect();
        mine == theirs
    }
}

impl fmt::Debug for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RuleSet")
            .field("alphabet", &self.alphabet)
            .field("order", &self.order.name())
            .field("rules", &self.rules)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diword::NormalDiword;
    use crate::poly::rational;

    #[test]
    fn push_makes_rules_monic_and_indexes_words() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let xy = NormalDiword::new(a.word("x y").unwrap(), 2).unwrap();
        let y = NormalDiword::new(a.word("y").unwrap(), 1).unwrap();
        let p = DiPolynomial::from_terms([(rational(3, 1), xy.clone()), (rational(1, 1), y)]);
        let mut s = RuleSet::new(a.clone());
        let id = s.push(p).unwrap();
        let r = s.get(id).unwrap();
        assert!(r.poly().is_monic(&**s.order()));
        assert!(r.is_strong());
        assert_eq!(r.center(), 2);
        assert_eq!(s.rules_with_word(xy.letters()), &[0]);
        assert_eq!(s.word_lengths(), &[2]);
        assert!(s.push(DiPolynomial::zero()).is_err());
        assert!(s.get(5).is_err());
    }
}
