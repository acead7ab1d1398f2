#![allow(dead_code)]

use dialgebra::*;
use proptest::prelude::*;

pub fn xn(a: &Alphabet, n: usize, m: usize) -> NormalDiword {
    NormalDiword::new(a.word(&vec!["x"; n].join(" ")).unwrap(), m).unwrap()
}

pub fn one_letter() -> Alphabet {
    Alphabet::new(["x"]).unwrap()
}

/// f, g, h, p over the single letter x.
pub fn fghp_polys(a: &Alphabet) -> [DiPolynomial; 4] {
    [
        DiPolynomial::monomial(xn(a, 4, 4)),
        DiPolynomial::from_terms([
            (rational(1, 1), xn(a, 3, 3)),
            (rational(-1, 2), xn(a, 3, 2)),
            (rational(-1, 2), xn(a, 3, 1)),
        ]),
        DiPolynomial::from_terms([(rational(1, 1), xn(a, 4, 3)), (rational(1, 1), xn(a, 4, 2))]),
        DiPolynomial::from_terms([(rational(1, 1), xn(a, 4, 2)), (rational(1, 3), xn(a, 4, 1))]),
    ]
}

pub fn named(a: &Alphabet, items: &[(&str, DiPolynomial)]) -> RuleSet {
    let mut s = RuleSet::new(a.clone());
    for (n, p) in items {
        s.push_named(*n, p.clone()).unwrap();
    }
    s
}

pub fn fghp() -> RuleSet {
    let a = one_letter();
    let [f, g, h, p] = fghp_polys(&a);
    named(&a, &[("f", f), ("g", g), ("h", h), ("p", p)])
}

pub fn ghp() -> RuleSet {
    let a = one_letter();
    let [_, g, h, p] = fghp_polys(&a);
    named(&a, &[("g", g), ("h", h), ("p", p)])
}

pub fn letters3() -> Alphabet {
    Alphabet::new(["x1", "x2", "x3"]).unwrap()
}

/// `2[x1 x2 x3]_3 - 2[x1 x2 x3]_2 + 3[x1 x3]_2` with x1 > x2 > x3.
pub fn worked_f() -> (Alphabet, DiPolynomial) {
    let a = letters3();
    let f = parse_poly("2 [x1 x2 x3 @ 3] - 2 [x1 x2 x3 @ 2] + 3 [x1 x3 @ 2]", &a).unwrap();
    (a, f)
}

pub fn alphabet_n(n: usize) -> Alphabet {
    Alphabet::new((1..=n).map(|i| format!("x{i}"))).unwrap()
}

pub fn diword_strategy(letters: u16, max_len: usize) -> impl Strategy<Value = NormalDiword> {
    (1..=max_len)
        .prop_flat_map(move |len| (prop::collection::vec(0..letters, len), 1..=len))
        .prop_map(|(w, m)| {
            NormalDiword::new(Word::new(w.into_iter().map(Letter).collect()).unwrap(), m).unwrap()
        })
}

pub fn coeff_strategy() -> impl Strategy<Value = Coefficient> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rational(n, d))
}

pub fn poly_strategy(
    letters: u16,
    max_len: usize,
    max_terms: usize,
) -> impl Strategy<Value = DiPolynomial> {
    prop::collection::vec(
        (coeff_strategy(), diword_strategy(letters, max_len)),
        0..=max_terms,
    )
    .prop_map(DiPolynomial::from_terms)
}

pub fn nonzero_poly_strategy(
    letters: u16,
    max_len: usize,
    max_terms: usize,
) -> impl Strategy<Value = DiPolynomial> {
    poly_strategy(letters, max_len, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn context_strategy(letters: u16, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..letters).prop_map(Letter), 0..=max_len)
}
