//! Brute-force ideal membership by exact elimination over all S-diwords of
//! bounded length. Independent of reduction and compositions.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::diword::NormalDiword;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::poly::{Coefficient, DiPolynomial};
use crate::rewrite::SDiword;
use crate::rules::RuleSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `f` equals the sum of `c * expand(sd)`.
    Certified(Vec<(Coefficient, SDiword)>),
    /// No combination exists within the bound. Says nothing about larger bounds.
    UnknownAtBound(usize),
}

impl Membership {
    pub fn is_certified(&self) -> bool {
        matches!(self, Membership::Certified(_))
    }
}

pub fn default_bound(f: &DiPolynomial) -> usize {
    f.max_len() + 2
}

#[derive(Clone, Debug)]
struct Row {
    poly: DiPolynomial,
    combo: BTreeMap<usize, Coefficient>,
}

fn axpy(acc: &mut BTreeMap<usize, Coefficient>, c: &Coefficient, x: &BTreeMap<usize, Coefficient>) {
    for (i, v) in x {
        let slot = acc.entry(*i).or_insert_with(Coefficient::zero);
        *slot += c * v;
        if slot.is_zero() {
            acc.remove(i);
        }
    }
}

/// Row echelon form of the span of every S-diword whose words have at most
/// `bound` letters. Pivots are the greatest diword of each row.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    bound: usize,
    generators: Vec<SDiword>,
    rows: BTreeMap<NormalDiword, Row>,
}

impl SpanBasis {
    pub fn new(rules: &RuleSet, bound: usize) -> Result<Self> {
        Self::with_execution(rules, bound, Execution::default())
    }

    pub fn with_execution(rules: &RuleSet, bound: usize, exec: Execution) -> Result<Self> {
        let contexts = rules.alphabet().contexts_up_to(bound);
        let mut generators = Vec::new();
        for r in rules.rules() {
            let len = r.poly().max_len();
            if len > bound {
                continue;
            }
            let room = bound - len;
            for a in contexts.iter().filter(|a| a.len() <= room) {
                for b in contexts.iter().filter(|b| a.len() + b.len() <= room) {
                    for center in 1..=a.len() + b.len() + 1 {
                        generators.push(SDiword {
                            rule: r.id(),
                            left: a.clone(),
                            right: b.clone(),
                            center,
                        });
                    }
                }
            }
        }
        let expanded = par::map(exec, &generators, |g| g.expand(rules));
        let mut basis = SpanBasis {
            bound,
            generators,
            rows: BTreeMap::new(),
        };
        for (i, poly) in expanded.into_iter().enumerate() {
            basis.insert(i, poly?);
        }
        Ok(basis)
    }

    fn eliminate(
        &self,
        poly: &mut DiPolynomial,
        combo: &mut BTreeMap<usize, Coefficient>,
        sign: i64,
    ) {
        loop {
            let hit = poly
                .iter()
                .rev()
                .find(|(d, _)| self.rows.contains_key(*d))
                .map(|(d, c)| (d.clone(), c.clone()));
            let Some((pivot, c)) = hit else { break };
            let row = &self.rows[&pivot];
            poly.add_scaled(&-c.clone(), &row.poly);
            axpy(
                combo,
                &(Coefficient::from_integer(sign.into()) * c),
                &row.combo,
            );
        }
    }

    fn insert(&mut self, index: usize, mut poly: DiPolynomial) {
        let mut combo = BTreeMap::from([(index, Coefficient::one())]);
        self.eliminate(&mut poly, &mut combo, -1);
        let Some((pivot, lead)) = poly.iter().next_back().map(|(d, c)| (d.clone(), c.clone()))
        else {
            return;
        };
        let inv = lead.recip();
        let poly = poly.scale(&inv);
        let combo = combo.into_iter().map(|(i, v)| (i, v * &inv)).collect();
        self.rows.insert(pivot, Row { poly, combo });
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn generators(&self) -> &[SDiword] {
        &self.generators
    }

    /// Dimension of the span.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn certify(&self, f: &DiPolynomial) -> Result<Membership> {
        let len = f.max_len();
        if len > self.bound {
            return Err(Error::BoundTooSmall {
                bound: self.bound,
                len,
            });
        }
        let mut rest = f.clone();
        let mut combo = BTreeMap::new();
        self.eliminate(&mut rest, &mut combo, 1);
        if !rest.is_zero() {
            return Ok(Membership::UnknownAtBound(self.bound));
        }
        Ok(Membership::Certified(
            combo
                .into_iter()
                .map(|(i, c)| (c, self.generators[i].clone()))
                .collect(),
        ))
    }
}

/// Decides whether `f` lies in the span of the S-diwords of length at most
/// `bound` (default: longest support word plus two).
pub fn span_membership(
    f: &DiPolynomial,
    rules: &RuleSet,
    bound: Option<usize>,
) -> Result<Membership> {
    let bound = bound.unwrap_or_else(|| default_bound(f));
    let len = f.max_len();
    if len > bound {
        return Err(Error::BoundTooSmall { bound, len });
    }
    SpanBasis::new(rules, bound)?.certify(f)
}

/// Sum of a certificate, for checking it against the claimed element.
pub fn combination_value(
    combo: &[(Coefficient, SDiword)],
    rules: &RuleSet,
) -> Result<DiPolynomial> {
    let mut out = DiPolynomial::zero();
    for (c, sd) in combo {
        out.add_scaled(c, &sd.expand(rules)?);
    }
    Ok(out)
}
