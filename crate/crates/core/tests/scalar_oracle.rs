//! Field arithmetic against evaluation at rational points.

use proptest::prelude::*;
use weakhopf_core::{Rational, Scalar};

fn laurent(coeffs: &[i64], shift: i64) -> Scalar {
    coeffs.iter().enumerate().fold(Scalar::zero(), |acc, (i, &c)| {
        &acc + &(&Scalar::from_int(c) * &Scalar::q_pow(i as i64 - shift))
    })
}

fn rational_fn() -> impl Strategy<Value = Scalar> {
    (
        prop::collection::vec(-5i64..=5, 1..4),
        prop::collection::vec(-5i64..=5, 1..4),
        0i64..3,
    )
        .prop_filter_map("zero denominator", |(n, d, s)| {
            let den = laurent(&d, 0);
            (!den.is_zero()).then(|| laurent(&n, s).try_div(&den).unwrap())
        })
}

fn point() -> impl Strategy<Value = Rational> {
    (-7i64..=7, 1i64..=5)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #[test]
    fn operations_commute_with_evaluation(a in rational_fn(), b in rational_fn(), x in point()) {
        let (Ok(ax), Ok(bx)) = (a.eval(&x), b.eval(&x)) else { return Ok(()) };
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), &ax + &bx);
        prop_assert_eq!((&a - &b).eval(&x).unwrap(), &ax - &bx);
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &ax * &bx);
        // a/b may cancel a common root, so only compare where b(x) is nonzero
        if bx != Rational::from_integer(0.into()) {
            if let Ok(v) = a.try_div(&b).unwrap().eval(&x) {
                prop_assert_eq!(v, &ax / &bx);
            }
        }
    }

    #[test]
    fn lowest_terms_make_equality_structural(a in rational_fn(), b in rational_fn()) {
        prop_assume!(!b.is_zero());
        let back = &a.try_div(&b).unwrap() * &b;
        prop_assert_eq!(back, a);
    }

    #[test]
    fn render_parse_round_trip(a in rational_fn()) {
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }
}

#[test]
fn quantum_bracket() {
    let two = Scalar::q_bracket2();
    let x = Rational::from_integer(3.into());
    assert_eq!(two.eval(&x).unwrap(), Rational::new(10.into(), 3.into()));
    let inv = Scalar::inv_q_minus_qinv();
    assert_eq!(inv.eval(&x).unwrap(), Rational::new(3.into(), 8.into()));
    assert!(inv.eval(&Rational::from_integer(1.into())).is_err());
}

#[test]
fn denominators_are_monic() {
    let s = Scalar::parse("(2*q)/(4*q^2 + 4)").unwrap();
    assert_eq!(s, Scalar::parse("(q/2)/(q^2 + 1)").unwrap());
    assert!(s.denom().leading().unwrap() == &Rational::from_integer(1.into()));
}

#[test]
fn mixing_fields_is_an_error() {
    let q = Scalar::parse("q").unwrap();
    let a = Scalar::parse("alpha").unwrap();
    assert!(q.try_add(&a).is_err());
    assert!(q.try_add(&Scalar::from_int(3)).is_ok());
}
