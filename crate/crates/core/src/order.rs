//! Monomial orders on words and the induced monomial-center order on diwords.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{deglex_cmp, Alphabet, Letter};
use crate::diword::NormalDiword;
use crate::error::{Error, Result};

/// A strict total order on nonempty words that is compatible with
/// concatenation on both sides and well-founded at bounded length.
pub trait WordOrder: fmt::Debug + Send + Sync {
    fn name(&self) -> &str;

    fn cmp_words(&self, a: &[Letter], b: &[Letter]) -> Ordering;

    /// True when the order coincides with the built-in `Ord` on `Word`
    /// (and therefore on `NormalDiword`). Enables sorted-map fast paths.
    fn is_deglex(&self) -> bool {
        false
    }
}

pub type SharedOrder = Arc<dyn WordOrder>;

/// Length first, then lexicographic with the alphabet's letter order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DegLex;

impl WordOrder for DegLex {
    fn name(&self) -> &str {
        "deglex"
    }

    fn cmp_words(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        deglex_cmp(a, b)
    }

    fn is_deglex(&self) -> bool {
        true
    }
}

pub fn deglex() -> SharedOrder {
    Arc::new(DegLex)
}

/// Monomial-center comparison: words first, then the larger center wins.
pub fn compare(a: &NormalDiword, b: &NormalDiword, order: &dyn WordOrder) -> Ordering {
    if order.is_deglex() {
        return a.cmp(b);
    }
    order
        .cmp_words(a.letters(), b.letters())
        .then_with(|| a.center().cmp(&b.center()))
}

/// Samples random words and rejects `order` on the first violation of
/// totality, antisymmetry, transitivity or the two-sided monomial law.
pub fn validate_order(
    order: &dyn WordOrder,
    alphabet: &Alphabet,
    samples: usize,
    seed: u64,
) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alphabet.len() as u16;
    let word = |rng: &mut ChaCha8Rng| -> Vec<Letter> {
        let len = rng.random_range(1..=5);
        (0..len).map(|_| Letter(rng.random_range(0..n))).collect()
    };
    let fail = |detail: String| Error::InvalidOrder {
        name: order.name().to_string(),
        detail,
    };
    for _ in 0..samples {
        let (u, v, w) = (word(&mut rng), word(&mut rng), word(&mut rng));
        let uv = order.cmp_words(&u, &v);
        if uv != order.cmp_words(&v, &u).reverse() {
            return Err(fail(format!("{u:?} and {v:?} compare asymmetrically")));
        }
        if (uv == Ordering::Equal) != (u == v) {
            return Err(fail(format!("{u:?} and {v:?} tie without being equal")));
        }
        if order.cmp_words(&u, &u) != Ordering::Equal {
            return Err(fail(format!("{u:?} is not equal to itself")));
        }
        let vw = order.cmp_words(&v, &w);
        if uv == vw && uv != Ordering::Equal && order.cmp_words(&u, &w) != uv {
            return Err(fail(format!("transitivity fails on {u:?}, {v:?}, {w:?}")));
        }
        if uv != Ordering::Equal {
            let (big, small) = if uv == Ordering::Greater {
                (&u, &v)
            } else {
                (&v, &u)
            };
            let right = |x: &Vec<Letter>| [x.as_slice(), w.as_slice()].concat();
            let left = |x: &Vec<Letter>| [w.as_slice(), x.as_slice()].concat();
            if order.cmp_words(&right(big), &right(small)) != Ordering::Greater
                || order.cmp_words(&left(big), &left(small)) != Ordering::Greater
            {
                return Err(fail(format!(
                    "{big:?} > {small:?} is not preserved by multiplying with {w:?}"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug)]
    struct PureLex;

    impl WordOrder for PureLex {
        fn name(&self) -> &str {
            "lex"
        }
        // prefix-smaller lex: x < x y, but x x > x y x
        fn cmp_words(&self, a: &[Letter], b: &[Letter]) -> Ordering {
            a.cmp(b)
        }
    }

    #[derive(Debug)]
    struct RevDegLex;

    impl WordOrder for RevDegLex {
        fn name(&self) -> &str {
            "rev-deglex"
        }
        fn cmp_words(&self, a: &[Letter], b: &[Letter]) -> Ordering {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.iter().rev().cmp(b.iter().rev()))
        }
    }

    #[test]
    fn deglex_passes_validation() {
        let a = Alphabet::new(["x", "y", "z"]).unwrap();
        validate_order(&DegLex, &a, 2000, 7).unwrap();
        validate_order(&RevDegLex, &a, 2000, 7).unwrap();
    }

    #[test]
    fn lex_without_degree_is_rejected() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let err = validate_order(&PureLex, &a, 2000, 1).unwrap_err();
        assert!(matches!(err, Error::InvalidOrder { .. }));
    }

    #[test]
    fn custom_order_compares_centers_after_words() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let d = |w: &str, m| NormalDiword::new(a.word(w).unwrap(), m).unwrap();
        assert_eq!(
            compare(&d("x y", 2), &d("x y", 1), &RevDegLex),
            Ordering::Greater
        );
        // x > y, so reverse lex prefers the word ending in x
        assert_eq!(
            compare(&d("x y", 2), &d("y x", 1), &RevDegLex),
            Ordering::Less
        );
        assert_eq!(
            compare(&d("x y", 2), &d("y x", 1), &DegLex),
            Ordering::Greater
        );
    }
}
