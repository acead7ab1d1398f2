//! Letters, alphabets and associative words.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A generator. Larger values are greater in the base order of the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

/// A finite, totally ordered set of named generators.
///
/// Symbols are declared greatest-first: in `Alphabet::new(["x1", "x2", "x3"])`
/// we have `x1 > x2 > x3`.
#[derive(Clone)]
pub struct Alphabet {
    symbols: Arc<[String]>,
    index: Arc<HashMap<String, Letter>>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > u16::MAX as usize {
            return Err(Error::LetterOutOfRange(u16::MAX));
        }
        let n = symbols.len();
        let mut index = HashMap::with_capacity(n);
        for (pos, name) in symbols.iter().enumerate() {
            if name.is_empty()
                || name
                    .chars()
                    .any(|c| c.is_whitespace() || "[]@:=#+-/".contains(c))
            {
                return Err(Error::UnknownSymbol(name.clone()));
            }
            if index
                .insert(name.clone(), Letter((n - 1 - pos) as u16))
                .is_some()
            {
                return Err(Error::DuplicateSymbol(name.clone()));
            }
        }
        Ok(Alphabet {
            symbols: symbols.into(),
            index: Arc::new(index),
        })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol names in declaration (greatest-first) order.
    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// Letters in declaration order, i.e. from greatest to smallest.
    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        let n = self.symbols.len();
        (0..n).map(move |pos| Letter((n - 1 - pos) as u16))
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn name(&self, letter: Letter) -> &str {
        let n = self.symbols.len();
        &self.symbols[n - 1 - letter.0 as usize]
    }

    pub fn contains(&self, letter: Letter) -> bool {
        (letter.0 as usize) < self.symbols.len()
    }

    /// Parses whitespace-separated symbol names into a word.
    pub fn word(&self, text: &str) -> Result<Word> {
        let letters = text
            .split_whitespace()
            .map(|s| self.letter(s))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }

    pub fn render(&self, letters: &[Letter]) -> String {
        letters
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Every word of exactly `len` letters, in increasing deg-lex order.
    pub fn words_of_len(&self, len: usize) -> Vec<Word> {
        if len == 0 {
            return Vec::new();
        }
        let n = self.len() as u64;
        let total = n.pow(len as u32);
        (0..total)
            .map(|mut code| {
                let mut letters = vec![Letter(0); len];
                for slot in letters.iter_mut().rev() {
                    *slot = Letter((code % n) as u16);
                    code /= n;
                }
                Word(letters)
            })
            .collect()
    }

    /// Every possibly-empty letter sequence of length at most `max_len`.
    pub fn contexts_up_to(&self, max_len: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![Vec::new()];
        for len in 1..=max_len {
            out.extend(self.words_of_len(len).into_iter().map(Word::into_letters));
        }
        out
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Alphabet").field(&self.symbols).finish()
    }
}

/// A nonempty associative word. `Ord` is the deg-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(letters))
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    /// Concatenation `left · middle · right`, where the outer parts may be empty.
    pub fn sandwich(left: &[Letter], middle: &[Letter], right: &[Letter]) -> Self {
        let mut letters = Vec::with_capacity(left.len() + middle.len() + right.len());
        letters.extend_from_slice(left);
        letters.extend_from_slice(middle);
        letters.extend_from_slice(right);
        debug_assert!(!letters.is_empty());
        Word(letters)
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::sandwich(&self.0, &other.0, &[])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The commutative word: letters sorted in increasing order.
    pub fn sorted(&self) -> Word {
        let mut letters = self.0.clone();
        letters.sort_unstable();
        Word(letters)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

/// Deg-lex comparison of raw letter slices.
pub fn deglex_cmp(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
