mod common;

use common::alphabet_n;
use dialgebra::completion::{check_gs, reduce_basis, CheckConfig, Verdict};
use dialgebra::disemigroup::{
    abelian_left_product, abelian_right_product, audit_right_commutative, commutative_left_product,
    commutative_right_product, normal_form_set, AuditOutcome,
};
use dialgebra::rewrite::all_diwords;
use dialgebra::*;

const EXACT: [Family; 3] = [
    Family::Commutative,
    Family::Abelian,
    Family::LeftCommutative,
];

fn d(a: &Alphabet, text: &str) -> NormalDiword {
    parse_diword(text, a).unwrap()
}

#[test]
fn short_relations_are_bases_with_listed_normal_forms() {
    for n in [2, 3] {
        let a = alphabet_n(n);
        for fam in EXACT {
            let w = family_reduced(fam, &a).unwrap();
            let report = check_gs(&w, &CheckConfig::default()).unwrap();
            assert_eq!(report.verdict, Verdict::GS, "{fam} over {n} letters");
            assert_eq!(enumerate_irr(&w, 5), normal_form_set(fam, &a, 5), "{fam}");
        }
    }
}

#[test]
fn commutative_irr_counts() {
    let a = alphabet_n(3);
    let irr = enumerate_irr(&family_reduced(Family::Commutative, &a).unwrap(), 5);
    let counts: Vec<usize> = (1..=5)
        .map(|n| irr.iter().filter(|d| d.len() == n).count())
        .collect();
    assert_eq!(counts, [3, 12, 10, 15, 21]);
}

#[test]
fn rewriting_agrees_with_closed_forms() {
    for n in [2, 3] {
        let a = alphabet_n(n);
        for fam in EXACT {
            let p = Presentation::family(fam, &a).unwrap();
            for q in all_diwords(&a, 5) {
                assert_eq!(
                    p.nf(&q).unwrap(),
                    closed_form_nf(fam, &q),
                    "{fam}: {}",
                    q.display(&a)
                );
            }
        }
    }
}

#[test]
fn schema_and_short_relations_give_the_same_normal_forms() {
    let a = alphabet_n(2);
    for fam in EXACT {
        let schema = Presentation::schema(fam, &a, 5).unwrap();
        for q in all_diwords(&a, 4) {
            assert_eq!(schema.nf(&q).unwrap(), closed_form_nf(fam, &q), "{fam}");
        }
    }
}

#[test]
fn commutative_schema_reduces_to_the_short_relations() {
    let a = alphabet_n(3);
    let schema = family_rules(Family::Commutative, &a, 5).unwrap();
    let rb = reduce_basis(&schema, &CheckConfig::default()).unwrap();
    assert!(rb
        .basis
        .same_poly_set(&family_reduced(Family::Commutative, &a).unwrap()));
}

#[test]
fn quotient_products_match_formulas() {
    for n in [2, 3] {
        let a = alphabet_n(n);
        type Product = fn(&NormalDiword, &NormalDiword) -> NormalDiword;
        let cases: [(Family, Product, Product); 2] = [
            (
                Family::Commutative,
                commutative_right_product,
                commutative_left_product,
            ),
            (Family::Abelian, abelian_right_product, abelian_left_product),
        ];
        for (fam, right, left) in cases {
            let p = Presentation::family(fam, &a).unwrap();
            let nfs = normal_form_set(fam, &a, 4);
            for u in &nfs {
                for v in &nfs {
                    assert_eq!(p.nf(&u.right_product(v)).unwrap(), right(u, v), "{fam} ⊢");
                    assert_eq!(p.nf(&u.left_product(v)).unwrap(), left(u, v), "{fam} ⊣");
                }
            }
        }
    }
}

#[test]
fn worked_family_examples() {
    let a = Alphabet::new(["y", "x"]).unwrap();
    let comm = Presentation::family(Family::Commutative, &a).unwrap();
    assert_eq!(comm.nf(&d(&a, "[y x @ 1]")).unwrap(), d(&a, "[x y @ 1]"));
    assert!(comm
        .word_problem(&d(&a, "[x y @ 2]"), &d(&a, "[y x @ 2]"))
        .unwrap());
    assert!(!comm
        .word_problem(&d(&a, "[x y @ 1]"), &d(&a, "[x y @ 2]"))
        .unwrap());
    let x = d(&a, "[x @ 1]");
    let y = d(&a, "[y @ 1]");
    assert_eq!(commutative_right_product(&x, &y), d(&a, "[x y @ 2]"));
    assert_eq!(commutative_left_product(&y, &x), d(&a, "[x y @ 1]"));

    let b = Alphabet::new(["x2", "x1"]).unwrap();
    let ab = Presentation::family(Family::Abelian, &b).unwrap();
    assert_eq!(
        ab.nf(&d(&b, "[x1 x2 x1 x2 @ 2]")).unwrap(),
        d(&b, "[x1 x1 x2 x2 @ 3]")
    );
    assert_eq!(
        closed_form_nf(Family::Abelian, &d(&b, "[x2 @ 1]")),
        d(&b, "[x2 @ 1]")
    );
}

#[test]
fn mirrored_left_relations_hold_in_the_right_family() {
    let a = alphabet_n(3);
    for r in family_reduced(Family::LeftCommutative, &a).unwrap().rules() {
        let sides: Vec<_> = r.poly().support().map(|q| q.mirror()).collect();
        assert_eq!(
            closed_form_nf(Family::RightCommutative, &sides[0]),
            closed_form_nf(Family::RightCommutative, &sides[1])
        );
    }
    let q = d(&a, "[x1 x2 x3 @ 1]");
    assert_eq!(q.mirror(), d(&a, "[x3 x2 x1 @ 3]"));
}

#[test]
fn right_commutative_audit_reports_one_outcome() {
    for n in [2, 3] {
        let a = alphabet_n(n);
        let audit = audit_right_commutative(&a, 4, &CheckConfig::default()).unwrap();
        println!("{audit}");
        match audit.outcome() {
            AuditOutcome::Consistent => {
                assert_eq!(audit.verdict, Verdict::GS);
                assert_eq!(audit.irr, audit.mirrored);
            }
            AuditOutcome::Discrepancy(issues) => assert!(!issues.is_empty()),
        }
    }
}

#[test]
fn empty_instantiation() {
    let a = alphabet_n(2);
    for fam in Family::ALL {
        assert!(family_rules(fam, &a, 1).unwrap().is_empty());
    }
}
