mod common;

use std::cmp::Ordering;

use common::*;
use dialgebra::disemigroup::{sort_word, tau};
use dialgebra::format::format_diword;
use dialgebra::rewrite::is_irreducible;
use dialgebra::*;
use proptest::prelude::*;

fn prod_r(a: &DiPolynomial, b: &DiPolynomial) -> DiPolynomial {
    a.right_product(b)
}

fn prod_l(a: &DiPolynomial, b: &DiPolynomial) -> DiPolynomial {
    a.left_product(b)
}

fn mono(d: &NormalDiword) -> DiPolynomial {
    DiPolynomial::monomial(d.clone())
}

fn lead(p: &DiPolynomial) -> NormalDiword {
    p.iter().next_back().unwrap().0.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dialgebra_identities(
        a in poly_strategy(3, 3, 3),
        b in poly_strategy(3, 3, 3),
        c in poly_strategy(3, 3, 3),
    ) {
        prop_assert_eq!(prod_r(&prod_r(&a, &b), &c), prod_r(&a, &prod_r(&b, &c)));
        prop_assert_eq!(prod_l(&prod_l(&a, &b), &c), prod_l(&a, &prod_l(&b, &c)));
        prop_assert_eq!(prod_l(&a, &prod_r(&b, &c)), prod_l(&a, &prod_l(&b, &c)));
        prop_assert_eq!(prod_r(&prod_l(&a, &b), &c), prod_r(&prod_r(&a, &b), &c));
        prop_assert_eq!(prod_r(&a, &prod_l(&b, &c)), prod_l(&prod_r(&a, &b), &c));
    }

    #[test]
    fn order_is_monomial(
        u in diword_strategy(3, 4),
        v in diword_strategy(3, 4),
        w in diword_strategy(3, 4),
    ) {
        let (u, v) = match u.cmp(&v) {
            Ordering::Equal => return Ok(()),
            Ordering::Greater => (u, v),
            Ordering::Less => (v, u),
        };
        prop_assert!(w.right_product(&u) > w.right_product(&v));
        prop_assert!(u.left_product(&w) > v.left_product(&w));
        prop_assert!(u.right_product(&w) >= v.right_product(&w));
        prop_assert!(w.left_product(&u) >= w.left_product(&v));
        if u.word() > v.word() {
            prop_assert!(u.right_product(&w) > v.right_product(&w));
            prop_assert!(w.left_product(&u) > w.left_product(&v));
        }
    }

    #[test]
    fn leading_monomials_of_products(
        f in nonzero_poly_strategy(3, 3, 4),
        u in diword_strategy(3, 3),
    ) {
        let fl = lead(&f);
        let uf = mono(&u);
        prop_assert_eq!(lead(&prod_r(&uf, &f)), u.right_product(&fl));
        prop_assert_eq!(lead(&prod_l(&f, &uf)), fl.left_product(&u));
        prop_assert!(lead(&prod_l(&uf, &f)) <= u.left_product(&fl));
        prop_assert!(lead(&prod_r(&f, &uf)) <= fl.right_product(&u));
        let strong = f.leading_data(&DegLex).unwrap().strong;
        if strong {
            prop_assert_eq!(lead(&prod_l(&uf, &f)), u.left_product(&fl));
            prop_assert_eq!(lead(&prod_r(&f, &uf)), fl.right_product(&u));
        }
    }

    #[test]
    fn sdiwords_expand_to_products(
        s in nonzero_poly_strategy(2, 3, 3),
        a in context_strategy(2, 2),
        b in context_strategy(2, 2),
    ) {
        let alphabet = alphabet_n(2);
        let rules = RuleSet::from_polys(alphabet, [s]).unwrap();
        let r = &rules.rules()[0];
        let sp = r.poly();
        let word = |w: &[Letter], m: usize| NormalDiword::new(Word::new(w.to_vec()).unwrap(), m).unwrap();
        for k in 1..=a.len() + b.len() + 1 {
            let sd = SDiword { rule: 0, left: a.clone(), right: b.clone(), center: k };
            let mut expect = sp.clone();
            if k <= a.len() {
                expect = prod_l(&mono(&word(&a, k)), &expect);
            } else if !a.is_empty() {
                expect = prod_r(&mono(&word(&a, a.len())), &expect);
            }
            if !b.is_empty() {
                if k <= a.len() + 1 {
                    expect = prod_l(&expect, &mono(&word(&b, 1)));
                } else {
                    expect = prod_r(&expect, &mono(&word(&b, k - a.len() - 1)));
                }
            }
            prop_assert_eq!(sd.expand(&rules).unwrap(), expect.clone());

            let m = if k <= a.len() {
                k
            } else if k == a.len() + 1 {
                a.len() + r.center()
            } else {
                k + r.word().len() - 1
            };
            let admissible = p_set(r, a.len(), b.len()).contains(&m);
            match instantiate(r, &a, &b, m) {
                Ok(inst) => {
                    prop_assert!(admissible);
                    prop_assert_eq!(&inst, &expect);
                    let full = Word::sandwich(&a, r.word(), &b);
                    prop_assert_eq!(lead(&inst), NormalDiword::new(full, m).unwrap());
                }
                Err(_) => prop_assert!(!admissible),
            }
        }
    }

    #[test]
    fn normal_forms_are_idempotent_and_traced(
        s in prop::collection::vec(nonzero_poly_strategy(2, 3, 3), 1..=3),
        f in poly_strategy(2, 5, 5),
    ) {
        let rules = RuleSet::from_polys(alphabet_n(2), s).unwrap();
        let out = normal_form(&f, &rules);
        for d in out.nf.support() {
            prop_assert!(is_irreducible(d, &rules));
        }
        prop_assert_eq!(&f - &out.nf, out.traced_sum(&rules).unwrap());
        let again = normal_form(&out.nf, &rules);
        prop_assert_eq!(&again.nf, &out.nf);
        prop_assert!(again.trace.is_empty());
        if let Some(top) = f.iter().next_back().map(|(d, _)| d.clone()) {
            for d in out.nf.support() {
                prop_assert!(d <= &top);
            }
            for (_, occ) in &out.trace {
                prop_assert!(lead(&occ.instantiate(&rules).unwrap()) <= top);
            }
        }
        prop_assert_eq!(reduce(&f, &rules), out.nf);
    }

    #[test]
    fn tau_laws(
        u in prop::collection::vec(0u16..3, 1..6),
        v in prop::collection::vec(0u16..3, 1..6),
        m in 1usize..6,
    ) {
        let u: Vec<Letter> = u.into_iter().map(Letter).collect();
        let v: Vec<Letter> = v.into_iter().map(Letter).collect();
        let m = 1 + (m - 1) % u.len();
        let su = sort_word(&Word::new(u.clone()).unwrap());
        prop_assert!(tau(&su, m) <= m);
        let uv = [u.as_slice(), v.as_slice()].concat();
        let vu = [v.as_slice(), u.as_slice()].concat();
        for n in 1..=v.len() {
            prop_assert_eq!(tau(&uv, u.len() + n), tau(&vu, n));
        }
    }

    #[test]
    fn mirror_is_an_anti_involution(
        a in poly_strategy(3, 4, 3),
        b in poly_strategy(3, 4, 3),
    ) {
        prop_assert_eq!(a.mirror().mirror(), a.clone());
        prop_assert_eq!(prod_r(&a, &b).mirror(), prod_l(&b.mirror(), &a.mirror()));
        prop_assert_eq!(prod_l(&a, &b).mirror(), prod_r(&b.mirror(), &a.mirror()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn canonical_text_round_trips(p in poly_strategy(3, 5, 6)) {
        let a = alphabet_n(3);
        let text = format_poly(&p, &a);
        prop_assert_eq!(parse_poly(&text, &a).unwrap(), p.clone());
        for d in p.support() {
            prop_assert_eq!(&parse_diword(&format_diword(d, &a), &a).unwrap(), d);
        }
    }
}
