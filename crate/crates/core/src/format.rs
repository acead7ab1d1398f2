//! Line-oriented problem files and the canonical text form of diwords and
//! polynomials.
//!
//! ```text
//! # comment
//! alphabet: x1 x2 x3
//! order: deglex
//! option fuel: 64
//! poly f: 2 [x1 x2 x3 @ 3] - 2 [x1 x2 x3 @ 2] + 3 [x1 x3 @ 2]
//! rel: [x2 x1 @ 1] = [x1 x2 @ 1]
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::alphabet::Alphabet;
use crate::disemigroup::Presentation;
use crate::diword::NormalDiword;
use crate::error::{Error, Result};
use crate::order::{deglex, SharedOrder};
use crate::poly::{Coefficient, DiPolynomial};
use crate::rules::RuleSet;

type Parsed<T> = std::result::Result<T, String>;

fn diword_body(body: &str, alphabet: &Alphabet) -> Parsed<NormalDiword> {
    let (word, center) = body
        .split_once('@')
        .ok_or_else(|| format!("missing `@ center` in `[{body}]`"))?;
    let center: usize = center
        .trim()
        .parse()
        .map_err(|_| format!("bad center `{}`", center.trim()))?;
    let word = alphabet.word(word).map_err(|e| e.to_string())?;
    NormalDiword::new(word, center).map_err(|e| e.to_string())
}

fn bracketed<'a>(text: &'a str, what: &str) -> Parsed<(&'a str, &'a str)> {
    let text = text.trim_start();
    let rest = text
        .strip_prefix('[')
        .ok_or_else(|| format!("expected `[` before {what}, found `{text}`"))?;
    let close = rest.find(']').ok_or_else(|| "unclosed `[`".to_string())?;
    Ok((&rest[..close], &rest[close + 1..]))
}

fn coefficient(text: &str) -> Parsed<Coefficient> {
    if !text
        .chars()
        .all(|c| c.is_ascii_digit() || c == '/' || c == ' ')
    {
        return Err(format!("bad coefficient `{text}`"));
    }
    let big = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("bad coefficient `{text}`"))
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let d = big(d)?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            Ok(Coefficient::new(big(n)?, d))
        }
        None => Ok(Coefficient::from_integer(big(text)?)),
    }
}

fn poly_body(text: &str, alphabet: &Alphabet) -> Parsed<DiPolynomial> {
    let mut rest = text.trim();
    if rest == "0" {
        return Ok(DiPolynomial::zero());
    }
    let mut out = DiPolynomial::zero();
    let mut first = true;
    while !rest.is_empty() {
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        } else if !first {
            return Err(format!("expected `+` or `-` before `{rest}`"));
        }
        let open = rest
            .find('[')
            .ok_or_else(|| format!("expected a diword in `{rest}`"))?;
        let coeff_text = rest[..open].trim();
        let mut c = if coeff_text.is_empty() {
            Coefficient::one()
        } else {
            coefficient(coeff_text)?
        };
        if negative {
            c = -c;
        }
        let (body, after) = bracketed(&rest[open..], "a diword")?;
        out.add_term(diword_body(body, alphabet)?, c);
        rest = after.trim_start();
        first = false;
    }
    Ok(out)
}

/// Parses `[x1 x2 @ 2]`.
pub fn parse_diword(text: &str, alphabet: &Alphabet) -> Result<NormalDiword> {
    let (body, after) = bracketed(text, "a diword").map_err(|m| Error::parse(1, m))?;
    if !after.trim().is_empty() {
        return Err(Error::parse(1, format!("trailing text `{}`", after.trim())));
    }
    diword_body(body, alphabet).map_err(|m| Error::parse(1, m))
}

/// Parses `2 [x1 x2 @ 2] - 1/3 [x2 @ 1]`; repeated diwords are summed.
pub fn parse_poly(text: &str, alphabet: &Alphabet) -> Result<DiPolynomial> {
    poly_body(text, alphabet).map_err(|m| Error::parse(1, m))
}

/// Canonical text: terms decreasing, reduced fractions, unit coefficients
/// omitted.
pub fn format_poly(poly: &DiPolynomial, alphabet: &Alphabet) -> String {
    poly.display(alphabet).to_string()
}

pub fn format_diword(d: &NormalDiword, alphabet: &Alphabet) -> String {
    d.display(alphabet).to_string()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub alphabet: Alphabet,
    pub order: String,
    pub polys: Vec<(String, DiPolynomial)>,
    pub relations: Vec<(NormalDiword, NormalDiword)>,
    pub options: BTreeMap<String, String>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet = None;
        let mut order = None;
        let mut polys: Vec<(String, DiPolynomial)> = Vec::new();
        let mut relations = Vec::new();
        let mut options = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |m: String| Error::parse(line, m);
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (head, body) = content
                .split_once(':')
                .ok_or_else(|| err(format!("expected `keyword: ...`, found `{content}`")))?;
            let mut words = head.split_whitespace();
            let keyword = words.next().unwrap_or("");
            let name = words.next();
            if words.next().is_some() {
                return Err(err(format!("malformed header `{head}`")));
            }
            let body = body.trim();
            match (keyword, name) {
                ("alphabet", None) => {
                    if alphabet.is_some() {
                        return Err(err("alphabet declared twice".into()));
                    }
                    alphabet = Some(
                        Alphabet::new(body.split_whitespace()).map_err(|e| err(e.to_string()))?,
                    );
                }
                ("order", None) => {
                    if body != "deglex" {
                        return Err(err(format!("unsupported order `{body}`")));
                    }
                    order = Some(body.to_string());
                }
                ("option", Some(key)) => {
                    options.insert(key.to_string(), body.to_string());
                }
                ("poly", Some(name)) => {
                    let a = alphabet
                        .as_ref()
                        .ok_or_else(|| err("poly before alphabet".into()))?;
                    if polys.iter().any(|(n, _)| n == name) {
                        return Err(err(format!("polynomial `{name}` declared twice")));
                    }
                    polys.push((name.to_string(), poly_body(body, a).map_err(err)?));
                }
                ("rel", None) => {
                    let a = alphabet
                        .as_ref()
                        .ok_or_else(|| err("rel before alphabet".into()))?;
                    let (l, r) = body
                        .split_once('=')
                        .ok_or_else(|| err("relation needs `=`".into()))?;
                    let side = |s: &str| -> Result<NormalDiword> {
                        let (b, after) = bracketed(s, "a diword").map_err(err)?;
                        if !after.trim().is_empty() {
                            return Err(err(format!("trailing text `{}`", after.trim())));
                        }
                        diword_body(b, a).map_err(err)
                    };
                    relations.push((side(l)?, side(r)?));
                }
                _ => return Err(err(format!("unknown declaration `{head}`"))),
            }
        }
        Ok(ProblemFile {
            alphabet: alphabet.ok_or_else(|| Error::parse(0, "missing alphabet"))?,
            order: order.unwrap_or_else(|| "deglex".to_string()),
            polys,
            relations,
            options,
        })
    }

    pub fn word_order(&self) -> SharedOrder {
        deglex()
    }

    /// Named polynomials followed by the relations as binomials `lhs - rhs`.
    pub fn rules(&self) -> Result<RuleSet> {
        let mut rules = RuleSet::with_order(self.alphabet.clone(), self.word_order());
        for (name, p) in &self.polys {
            rules.push_named(name.clone(), p.clone())?;
        }
        for (i, (l, r)) in self.relations.iter().enumerate() {
            if l == r {
                return Err(Error::TrivialRelation(format!(
                    "{} = {}",
                    l.display(&self.alphabet),
                    r.display(&self.alphabet)
                )));
            }
            let p = DiPolynomial::from_terms([
                (Coefficient::one(), l.clone()),
                (-Coefficient::one(), r.clone()),
            ]);
            rules.push_named(format!("rel{}", i + 1), p)?;
        }
        Ok(rules)
    }

    pub fn presentation(&self) -> Result<Presentation> {
        if self.polys.is_empty() {
            Presentation::new(self.alphabet.clone(), self.relations.iter().cloned())
        } else {
            Ok(Presentation::from_rules(self.rules()?))
        }
    }

    pub fn option(&self, key: &str) -> Option<&str> {
        self.options.get(key).map(String::as_str)
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet: {}", self.alphabet.symbols().join(" "))?;
        writeln!(f, "order: {}", self.order)?;
        for (k, v) in &self.options {
            writeln!(f, "option {k}: {v}")?;
        }
        for (name, p) in &self.polys {
            writeln!(f, "poly {name}: {}", format_poly(p, &self.alphabet))?;
        }
        for (l, r) in &self.relations {
            writeln!(
                f,
                "rel: {} = {}",
                l.display(&self.alphabet),
                r.display(&self.alphabet)
            )?;
        }
        Ok(())
    }
}
