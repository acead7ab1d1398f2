use std::fmt;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

/// A basis element `[u]_m` of the free dialgebra: a word with a marked
/// center position `1 <= m <= |u|`.
///
/// The derived `Ord` compares the word first (deg-lex) and then the center,
/// a larger center being greater.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalDiword {
    word: Word,
    center: usize,
}

impl NormalDiword {
    pub fn new(word: Word, center: usize) -> Result<Self> {
        if center == 0 || center > word.len() {
            return Err(Error::CenterOutOfRange {
                center,
                len: word.len(),
            });
        }
        Ok(NormalDiword { word, center })
    }

    pub(crate) fn new_unchecked(word: Word, center: usize) -> Self {
        debug_assert!(center >= 1 && center <= word.len());
        NormalDiword { word, center }
    }

    pub fn letter(letter: Letter) -> Self {
        NormalDiword {
            word: Word::single(letter),
            center: 1,
        }
    }

    /// `[u]_{|u|}`, the diword `u_1 ⊢ u_2 ⊢ ... ⊢ u_n`.
    pub fn right_ended(word: Word) -> Self {
        let center = word.len();
        NormalDiword { word, center }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn letters(&self) -> &[Letter] {
        self.word.letters()
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `[u]_m ⊢ [v]_n = [uv]_{|u|+n}`
    pub fn right_product(&self, other: &NormalDiword) -> NormalDiword {
        NormalDiword {
            word: self.word.concat(&other.word),
            center: self.len() + other.center,
        }
    }

    /// `[u]_m ⊣ [v]_n = [uv]_m`
    pub fn left_product(&self, other: &NormalDiword) -> NormalDiword {
        NormalDiword {
            word: self.word.concat(&other.word),
            center: self.center,
        }
    }

    /// The opposite-dialgebra image: reversed word, mirrored center.
    pub fn mirror(&self) -> NormalDiword {
        NormalDiword {
            word: self.word.reversed(),
            center: self.len() + 1 - self.center,
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayDiword {
            diword: self,
            alphabet,
        }
    }
}

impl fmt::Debug for NormalDiword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for l in self.letters() {
            write!(f, "{} ", l.0)?;
        }
        write!(f, "@ {}]", self.center)
    }
}

struct DisplayDiword<'a> {
    diword: &'a NormalDiword,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayDiword<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} @ {}]",
            self.alphabet.render(self.diword.letters()),
            self.diword.center
        )
    }
}
