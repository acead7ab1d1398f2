//! Polynomials in the free dialgebra over the rationals.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::alphabet::{Alphabet, Word};
use crate::diword::NormalDiword;
use crate::error::{Error, Result};
use crate::order::{compare, WordOrder};

pub type Coefficient = BigRational;

pub fn rational(numer: i64, denom: i64) -> Coefficient {
    BigRational::new(numer.into(), denom.into())
}

/// A finite linear combination of normal diwords. Zero coefficients are
/// never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DiPolynomial {
    terms: BTreeMap<NormalDiword, Coefficient>,
}

/// Cached leading-term analysis of a nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData {
    pub leading: NormalDiword,
    pub coeff: Coefficient,
    pub assoc_word: Word,
    pub strong: bool,
}

impl DiPolynomial {
    pub fn zero() -> Self {
        DiPolynomial::default()
    }

    pub fn monomial(d: NormalDiword) -> Self {
        Self::term(Coefficient::one(), d)
    }

    pub fn term(c: Coefficient, d: NormalDiword) -> Self {
        let mut p = Self::zero();
        p.add_term(d, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Coefficient, NormalDiword)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (c, d) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &NormalDiword) -> Coefficient {
        self.terms.get(d).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn contains(&self, d: &NormalDiword) -> bool {
        self.terms.contains_key(d)
    }

    /// Terms in increasing deg-lex-center order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&NormalDiword, &Coefficient)> + '_ {
        self.terms.iter()
    }

    /// Terms in strictly decreasing order under `order`.
    pub fn terms_desc(&self, order: &dyn WordOrder) -> Vec<(&NormalDiword, &Coefficient)> {
        let mut out: Vec<_> = self.terms.iter().rev().collect();
        if !order.is_deglex() {
            out.sort_by(|a, b| compare(b.0, a.0, order));
        }
        out
    }

    pub fn support(&self) -> impl Iterator<Item = &NormalDiword> + '_ {
        self.terms.keys()
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(NormalDiword::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, d: NormalDiword, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Coefficient, other: &DiPolynomial) {
        if c.is_zero() {
            return;
        }
        for (d, k) in &other.terms {
            self.add_term(d.clone(), c * k);
        }
    }

    pub fn remove(&mut self, d: &NormalDiword) -> Option<Coefficient> {
        self.terms.remove(d)
    }

    pub fn scale(&self, c: &Coefficient) -> DiPolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        DiPolynomial {
            terms: self.terms.iter().map(|(d, k)| (d.clone(), k * c)).collect(),
        }
    }

    fn bilinear(
        &self,
        other: &DiPolynomial,
        mul: impl Fn(&NormalDiword, &NormalDiword) -> NormalDiword,
    ) -> DiPolynomial {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(mul(u, v), a * b);
            }
        }
        out
    }

    /// The `⊢` product.
    pub fn right_product(&self, other: &DiPolynomial) -> DiPolynomial {
        self.bilinear(other, NormalDiword::right_product)
    }

    /// The `⊣` product.
    pub fn left_product(&self, other: &DiPolynomial) -> DiPolynomial {
        self.bilinear(other, NormalDiword::left_product)
    }

    pub fn mirror(&self) -> DiPolynomial {
        DiPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.mirror(), c.clone()))
                .collect(),
        }
    }

    pub fn leading(&self, order: &dyn WordOrder) -> Option<(&NormalDiword, &Coefficient)> {
        if order.is_deglex() {
            self.terms.iter().next_back()
        } else {
            self.terms.iter().max_by(|a, b| compare(a.0, b.0, order))
        }
    }

    pub fn leading_monomial(&self, order: &dyn WordOrder) -> Option<&NormalDiword> {
        self.leading(order).map(|(d, _)| d)
    }

    pub fn leading_data(&self, order: &dyn WordOrder) -> Result<LeadingData> {
        let (lead, c) = self.leading(order).ok_or(Error::ZeroPolynomial)?;
        // Every other term is smaller, so its word is at most the leading
        // word; strength fails exactly when some other term shares it.
        let strong = self
            .terms
            .keys()
            .all(|d| d == lead || d.letters() != lead.letters());
        Ok(LeadingData {
            leading: lead.clone(),
            coeff: c.clone(),
            assoc_word: lead.word().clone(),
            strong,
        })
    }

    pub fn is_monic(&self, order: &dyn WordOrder) -> bool {
        self.leading(order).is_some_and(|(_, c)| c.is_one())
    }

    pub fn monic(&self, order: &dyn WordOrder) -> Result<DiPolynomial> {
        let (_, c) = self.leading(order).ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&c.recip()))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayPoly {
            poly: self,
            alphabet: Some(alphabet),
        }
    }
}

impl From<NormalDiword> for DiPolynomial {
    fn from(d: NormalDiword) -> Self {
        DiPolynomial::monomial(d)
    }
}

impl Add for &DiPolynomial {
    type Output = DiPolynomial;

    fn add(self, rhs: &DiPolynomial) -> DiPolynomial {
        let mut out = self.clone();
        out.add_scaled(&Coefficient::one(), rhs);
        out
    }
}

impl Sub for &DiPolynomial {
    type Output = DiPolynomial;

    fn sub(self, rhs: &DiPolynomial) -> DiPolynomial {
        let mut out = self.clone();
        out.add_scaled(&-Coefficient::one(), rhs);
        out
    }
}

impl Neg for &DiPolynomial {
    type Output = DiPolynomial;

    fn neg(self) -> DiPolynomial {
        self.scale(&-Coefficient::one())
    }
}

impl Mul<&DiPolynomial> for &Coefficient {
    type Output = DiPolynomial;

    fn mul(self, rhs: &DiPolynomial) -> DiPolynomial {
        rhs.scale(self)
    }
}

struct DisplayPoly<'a> {
    poly: &'a DiPolynomial,
    alphabet: Option<&'a Alphabet>,
}

/// Writes `c` in front of a term: `2 `, `- 1/3 `, `+ ` and so on.
pub(crate) fn write_coeff(f: &mut impl fmt::Write, c: &Coefficient, first: bool) -> fmt::Result {
    let sign = c.is_negative();
    match (first, sign) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let abs = c.abs();
    if !abs.is_one() {
        write!(f, "{abs}")?;
        write!(f, " ")?;
    }
    Ok(())
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.poly.terms.iter().rev().enumerate() {
            write_coeff(f, c, i == 0)?;
            match self.alphabet {
                Some(a) => write!(f, "{}", d.display(a))?,
                None => write!(f, "{d:?}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = DisplayPoly {
            poly: self,
            alphabet: None,
        };
        fmt::Display::fmt(&d, f)
    }
}
