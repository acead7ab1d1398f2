mod common;

use std::collections::BTreeSet;

use common::*;
use dialgebra::completion::{check_gs, complete, reduce_basis, CheckConfig, Verdict};
use dialgebra::oracle::{combination_value, SpanBasis};
use dialgebra::rewrite::all_diwords;
use dialgebra::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gs_corpus() -> Vec<(&'static str, RuleSet)> {
    let a = letters3();
    let single = RuleSet::from_polys(a.clone(), [parse_poly("[x1 x2 @ 2]", &a).unwrap()]).unwrap();
    let x = one_letter();
    let [f, g, ..] = fghp_polys(&x);
    let fg = RuleSet::from_polys(x.clone(), [f, g.clone()]).unwrap();
    let two = alphabet_n(2);
    vec![
        ("x1x2", single),
        ("fghp", fghp()),
        ("g", RuleSet::from_polys(x, [g]).unwrap()),
        (
            "complete(f,g)",
            complete(&fg, &CheckConfig::default()).unwrap().basis,
        ),
        ("comm2", family_reduced(Family::Commutative, &two).unwrap()),
        ("abel2", family_reduced(Family::Abelian, &two).unwrap()),
        (
            "left2",
            family_reduced(Family::LeftCommutative, &two).unwrap(),
        ),
    ]
}

fn random_ideal_element(rules: &RuleSet, rng: &mut ChaCha8Rng) -> DiPolynomial {
    let n = rules.alphabet().len() as u16;
    let mut out = DiPolynomial::zero();
    for _ in 0..rng.random_range(1..=4) {
        let r = &rules.rules()[rng.random_range(0..rules.len())];
        let mut ctx = |k: usize| -> Vec<Letter> {
            (0..rng.random_range(0..=k))
                .map(|_| Letter(rng.random_range(0..n)))
                .collect()
        };
        let (a, b) = (ctx(2), ctx(2));
        let centers = p_set(r, a.len(), b.len());
        let m = centers[rng.random_range(0..centers.len())];
        let c = rational(rng.random_range(-5..=5), rng.random_range(1..=3));
        out.add_scaled(&c, &instantiate(r, &a, &b, m).unwrap());
    }
    out
}

/// Leading monomials of every normal S-diword up to `max_len`, built by
/// expansion rather than by matching.
fn normal_leading_monomials(rules: &RuleSet, max_len: usize) -> BTreeSet<NormalDiword> {
    let ctx = rules.alphabet().contexts_up_to(max_len);
    let mut out = BTreeSet::new();
    for r in rules.rules() {
        let len = r.word().len();
        if len > max_len {
            continue;
        }
        for a in ctx.iter().filter(|a| a.len() + len <= max_len) {
            for b in ctx.iter().filter(|b| a.len() + len + b.len() <= max_len) {
                for k in 1..=a.len() + b.len() + 1 {
                    let sd = SDiword {
                        rule: r.id(),
                        left: a.clone(),
                        right: b.clone(),
                        center: k,
                    };
                    if sd.is_normal(rules).unwrap() {
                        let e = sd.expand(rules).unwrap();
                        out.insert(e.iter().next_back().unwrap().0.clone());
                    }
                }
            }
        }
    }
    out
}

#[test]
fn gs_bases_satisfy_the_diamond_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, rules) in gs_corpus() {
        let report = check_gs(&rules, &CheckConfig::default()).unwrap();
        assert_eq!(report.verdict, Verdict::GS, "{name}");
        for _ in 0..200 {
            let f = random_ideal_element(&rules, &mut rng);
            assert!(reduce(&f, &rules).is_zero(), "{name}: {f:?}");
        }
        let len = if rules.alphabet().len() > 2 { 4 } else { 5 };
        let leads = normal_leading_monomials(&rules, len);
        let scan: Vec<_> = all_diwords(rules.alphabet(), len)
            .into_iter()
            .filter(|d| !leads.contains(d))
            .collect();
        assert_eq!(enumerate_irr(&rules, len), scan, "{name}");
    }
}

#[test]
fn non_gs_witness_is_an_irreducible_ideal_element() {
    let rules = ghp();
    let report = check_gs(&rules, &CheckConfig::default()).unwrap();
    assert_eq!(report.verdict, Verdict::NotGS);
    let a = rules.alphabet().clone();
    for w in &report.witnesses {
        let lead = w.remainder.iter().next_back().unwrap().0;
        assert!(enumerate_irr(&rules, lead.len()).contains(lead));
        let basis = SpanBasis::new(&rules, lead.len() + 1).unwrap();
        assert!(basis.certify(&w.remainder).unwrap().is_certified());
    }
    let left = report
        .witnesses
        .iter()
        .find(|w| w.composition.describe(&rules).starts_with("x ⊣ h"))
        .expect("x ⊣ h is nontrivial");
    assert_eq!(
        left.remainder,
        DiPolynomial::term(rational(2, 1), xn(&a, 5, 1))
    );
}

#[test]
fn oracle_agrees_with_reduction_on_gs_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (name, rules) in gs_corpus() {
        let bound = if rules.alphabet().len() > 2 { 5 } else { 6 };
        let basis = SpanBasis::new(&rules, bound).unwrap();
        let n = rules.alphabet().len() as u16;
        for i in 0..60 {
            let f = if i % 2 == 0 {
                let f = random_ideal_element(&rules, &mut rng);
                if f.max_len() > bound {
                    continue;
                }
                f
            } else {
                let mut f = DiPolynomial::zero();
                for _ in 0..rng.random_range(1..=3) {
                    let len = rng.random_range(1..=bound);
                    let w: Vec<Letter> = (0..len).map(|_| Letter(rng.random_range(0..n))).collect();
                    let d = NormalDiword::new(Word::new(w).unwrap(), rng.random_range(1..=len))
                        .unwrap();
                    f.add_term(d, rational(rng.random_range(-3..=3), 1));
                }
                f
            };
            let verdict = basis.certify(&f).unwrap();
            assert_eq!(
                verdict.is_certified(),
                reduce(&f, &rules).is_zero(),
                "{name}: {f:?}"
            );
            if let Membership::Certified(combo) = verdict {
                assert_eq!(combination_value(&combo, &rules).unwrap(), f);
            }
        }
    }
}

#[test]
fn oracle_sees_what_reduction_misses() {
    let rules = ghp();
    let a = rules.alphabet().clone();
    let x5 = DiPolynomial::monomial(xn(&a, 5, 1));
    assert!(!reduce(&x5, &rules).is_zero());
    let Membership::Certified(combo) = span_membership(&x5, &rules, Some(6)).unwrap() else {
        panic!("[x^5]_1 lies in the ideal");
    };
    assert_eq!(combination_value(&combo, &rules).unwrap(), x5);

    let f = fghp();
    let [fp, ..] = fghp_polys(&a);
    assert!(span_membership(&fp, &f, Some(5)).unwrap().is_certified());

    let g = RuleSet::from_polys(a.clone(), [fghp_polys(&a)[1].clone()]).unwrap();
    let x32 = DiPolynomial::monomial(xn(&a, 3, 2));
    assert_eq!(
        span_membership(&x32, &g, Some(5)).unwrap(),
        Membership::UnknownAtBound(5)
    );
}

#[test]
fn reduced_basis_is_unique_at_desk_scale() {
    let [f, g, h, p] = fghp_polys(&one_letter());
    let a = one_letter();
    let cfg = CheckConfig::default();
    let target = reduce_basis(&fghp(), &cfg).unwrap().basis;
    let perms = [[&p, &h, &g, &f], [&g, &f, &p, &h], [&h, &p, &f, &g]];
    for perm in perms {
        let s = RuleSet::from_polys(a.clone(), perm.into_iter().cloned()).unwrap();
        let got = reduce_basis(&s, &cfg).unwrap().basis;
        assert!(got.same_polys(&target));
    }
    let fg = RuleSet::from_polys(a.clone(), [f, g]).unwrap();
    let done = complete(&fg, &cfg).unwrap();
    assert!(reduce_basis(&done.basis, &cfg)
        .unwrap()
        .basis
        .same_polys(&target));
}

#[test]
fn completion_steps_are_ideal_members() {
    let a = one_letter();
    let [f, g, ..] = fghp_polys(&a);
    let fg = RuleSet::from_polys(a, [f, g]).unwrap();
    let done = complete(&fg, &CheckConfig::default()).unwrap();
    for (i, step) in done.log.iter().enumerate() {
        let prior = done
            .basis
            .rebuild(
                done.basis.rules()[..fg.len() + i]
                    .iter()
                    .map(|r| (r.name().to_string(), r.poly().clone())),
            )
            .unwrap();
        let mut sum = DiPolynomial::zero();
        for (c, sd) in &step.certificate {
            sum.add_scaled(c, &sd.expand(&prior).unwrap());
        }
        assert_eq!(sum, step.poly);
    }
}
