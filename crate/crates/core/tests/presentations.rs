//! Presentation examples, rewriting invariants and tensor arithmetic.

use proptest::prelude::*;
use weakhopf_core::catalog::{self, AlgebraSpec, WslOptions};
use weakhopf_core::classify;
use weakhopf_core::freealg::{Element, Strategy as Reduction, Word};
use weakhopf_core::tensorspace::TensorElement;
use weakhopf_core::{Error, Scalar};

fn alg(s: &str) -> std::sync::Arc<catalog::Algebra> {
    catalog::cached(s.parse().unwrap()).unwrap()
}

fn nf(a: &catalog::Algebra, s: &str) -> Element {
    a.nf(&a.parse(s).unwrap()).unwrap()
}

#[test]
fn classical_inverse_and_conjugation() {
    let u = alg("uqsl:2");
    assert_eq!(nf(&u, "K1*Ki1"), Element::one());
    assert_eq!(nf(&u, "Ki1*K1"), Element::one());
    assert_eq!(nf(&u, "K1*E1*Ki1"), nf(&u, "q^2*E1"));
    let s = u.maps.antipode(&u.system, &u.gen("E1").unwrap()).unwrap();
    assert_eq!(s, nf(&u, "-E1*Ki1"));
}

#[test]
fn mixed_coproduct_units() {
    let a = alg("wsl:2:1");
    let ty = |n: &str| a.alphabet().symbol(a.letter(n).unwrap()).gen_type;
    assert_eq!(ty("E1"), weakhopf_core::freealg::GenType::Type2);
    assert_eq!(ty("F1"), weakhopf_core::freealg::GenType::Type1);
    let j = a.j().unwrap();
    let (e, f, k, kb) = (nf(&a, "E1"), nf(&a, "F1"), nf(&a, "K1"), nf(&a, "Kb1"));
    let de = a.maps.coproduct(&a.system, &e).unwrap();
    assert_eq!(de, &TensorElement::pure(&[&j, &e]) + &TensorElement::pure(&[&e, &k]));
    let df = a.maps.coproduct(&a.system, &f).unwrap();
    assert_eq!(df, &TensorElement::pure(&[&f, &Element::one()]) + &TensorElement::pure(&[&kb, &f]));
}

#[test]
fn j_is_a_central_idempotent_and_cartan_products_agree() {
    for n in 2..=3 {
        for spec in catalog::all_wsl(n) {
            let a = catalog::cached(spec).unwrap();
            let j = a.j().unwrap();
            assert_eq!(a.mul(&j, &j).unwrap(), j, "{spec}");
            for l in a.alphabet().letters() {
                let x = Element::letter(l);
                assert_eq!(a.mul(&j, &x).unwrap(), a.mul(&x, &j).unwrap(), "{spec}");
            }
            for i in 2..n {
                assert_eq!(nf(&a, &format!("K{i}*Kb{i}")), j, "{spec}");
            }
        }
    }
}

#[test]
fn type2_generators_satisfy_the_type1_commutations() {
    let cartan = catalog::CartanMatrix::new(3);
    for spec in catalog::all_wsl(3) {
        let a = catalog::cached(spec).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                let c = cartan.entry(i, j);
                let lhs = nf(&a, &format!("K{j}*E{i}"));
                let rhs = a.mul(&Element::scalar(Scalar::q_pow(c)), &nf(&a, &format!("E{i}*K{j}"))).unwrap();
                assert_eq!(lhs, rhs, "{spec} K{j}E{i}");
                let lhs = nf(&a, &format!("K{j}*F{i}"));
                let rhs = a.mul(&Element::scalar(Scalar::q_pow(-c)), &nf(&a, &format!("F{i}*K{j}"))).unwrap();
                assert_eq!(lhs, rhs, "{spec} K{j}F{i}");
            }
        }
    }
}

#[test]
fn sandwich_relation_alone_derives_the_commutation() {
    // all-type-2 mixture, only the K E Kb = q^2 E form supplied
    let a = catalog::build_wsl_with(2, 0, WslOptions { degree_bound: 6, derived_type2_rules: false }).unwrap();
    let ek = Word::new(vec![a.letter("E1").unwrap(), a.letter("K1").unwrap()]);
    let rule = a.system.rule_for(&ek).expect("E1*K1 is reducible");
    assert_eq!(rule.rhs, nf(&a, "1/q^2*K1*E1"));
    let full = alg("wsl:2:0");
    for w in full.system.normal_words(4) {
        let x = Element::from_word(w);
        assert_eq!(a.render(&a.nf(&x).unwrap()), full.render(&full.nf(&x).unwrap()));
    }
}

#[test]
fn sweedler_rules() {
    let h1 = alg("sweedler:H1");
    assert_eq!(h1.system.rule_count(), 3);
    assert_eq!(nf(&h1, "g*x*g*x"), Element::zero());
    let h2 = alg("sweedler:H2");
    assert_eq!(nf(&h2, "x*g"), nf(&h2, "-g*x"));
    assert_eq!(nf(&h2, "g^2*x"), nf(&h2, "x"));
}

#[test]
fn overflow_is_reported() {
    let a = catalog::build_with_bound("wsl:2:3".parse().unwrap(), 4).unwrap();
    let w = Element::from_word(Word::new(vec![3, 0, 3, 0, 3, 0]));
    assert!(matches!(a.system.nf(&w), Err(Error::DegreeOverflow { .. })));
}

#[test]
fn specs_parse_and_validate() {
    assert_eq!("wsl:3:10".parse::<AlgebraSpec>().unwrap(), AlgebraSpec::Wsl { n: 3, d: 10 });
    assert!("wsl:3:16".parse::<AlgebraSpec>().is_err());
    assert!("wsl:1:0".parse::<AlgebraSpec>().is_err());
    assert!("sweedler:H3".parse::<AlgebraSpec>().is_err());
    assert_eq!(catalog::all_wsl(3).len(), classify::mixture_count(3) as usize);
}

#[test]
fn tensor_examples() {
    let a = alg("wsl:2:3");
    let rs = &a.system;
    let t = |x: &str, y: &str| TensorElement::pure(&[&a.parse(x).unwrap(), &a.parse(y).unwrap()]);
    let p = t("K1", "K1").multiply(&t("Kb1", "Kb1"), rs).unwrap();
    let j = a.j().unwrap();
    assert_eq!(p, TensorElement::pure(&[&j, &j]));
    assert_eq!(t("1", "E1").multiply(&t("1", "1"), rs).unwrap(), t("1", "E1"));
    let d = a.maps.coproduct(rs, &a.gen("E1").unwrap()).unwrap();
    assert_eq!(d.flip().unwrap(), &t("E1", "1") + &t("K1", "E1"));
}

fn word(len: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..len as u8, 0..=max).prop_map(Word::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_forms_are_stable(w in word(8, 5)) {
        let a = alg("wsl:3:10");
        let x = a.nf(&Element::from_word(w)).unwrap();
        prop_assert_eq!(a.nf(&x).unwrap(), x.clone());
        for (v, _) in x.terms() {
            prop_assert!(a.system.is_normal(v));
        }
    }

    #[test]
    fn multiplication_is_associative(u in word(4, 2), v in word(4, 2), w in word(4, 2)) {
        let a = alg("wsl:2:1");
        let (u, v, w) = (Element::from_word(u), Element::from_word(v), Element::from_word(w));
        let left = a.mul(&a.mul(&u, &v).unwrap(), &w).unwrap();
        let right = a.mul(&u, &a.mul(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn strategies_agree(w in word(8, 6), seed in any::<u64>()) {
        let a = alg("uqsl:3");
        let x = Element::from_word(w);
        prop_assert_eq!(
            a.system.nf_with(&x, Reduction::Leftmost).unwrap(),
            a.system.nf_with(&x, Reduction::Random(seed)).unwrap()
        );
    }

    #[test]
    fn flip_is_an_involution(u in word(4, 3), v in word(4, 3)) {
        let a = alg("wsl:2:3");
        let t = TensorElement::pure(&[&Element::from_word(u), &Element::from_word(v)]).normalize(&a.system).unwrap();
        prop_assert_eq!(t.flip().unwrap().flip().unwrap(), t);
    }
}
