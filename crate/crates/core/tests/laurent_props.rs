use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use stringchar::laurent::{LaurentPoly, Monomial};
use stringchar::{Error, VertexId};

const VARS: [&str; 3] = ["1", "2", "3'"];

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::array::uniform3(-2i64..3).prop_map(|e| {
        Monomial::from_exponents(VARS.iter().zip(e).map(|(v, e)| (VertexId::from(*v), e)))
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((monomial(), -4i64..5), 0..5)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

fn nonzero() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(f in poly(), g in poly(), s1 in poly(), m in monomial()) {
        let sub: BTreeMap<VertexId, LaurentPoly> =
            [(VertexId::from("1"), s1), (VertexId::from("3'"), LaurentPoly::monomial(m))].into();
        let lhs = (&f * &g).substitute(&sub);
        match (lhs, f.substitute(&sub), g.substitute(&sub)) {
            (Ok(l), Ok(a), Ok(b)) => {
                prop_assert_eq!(&l, &(&a * &b));
                prop_assert_eq!((&f + &g).substitute(&sub).unwrap(), &a + &b);
            }
            (_, Err(Error::NotInvertible(_)), _) | (_, _, Err(Error::NotInvertible(_))) => {}
            (Err(Error::NotInvertible(_)), _, _) => {}
            other => prop_assert!(false, "unexpected {:?}", other.0.err()),
        }
    }

    #[test]
    fn monomial_content_reassembles(f in nonzero()) {
        let (eta, p) = f.monomial_content().unwrap();
        prop_assert_eq!(p.mul_monomial(&eta), f);
        prop_assert!(p.is_polynomial());
        for v in VARS {
            let v = VertexId::from(v);
            prop_assert!(p.terms().any(|(m, _)| m.exponent(&v) == 0));
        }
    }

    #[test]
    fn text_and_json_round_trip(f in poly()) {
        let text = f.to_string();
        prop_assert_eq!(text.parse::<LaurentPoly>().unwrap(), f.clone());
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), f);
    }
}

#[test]
fn division_failures_are_reported() {
    let x1 = LaurentPoly::var("1");
    let f = &x1 + &LaurentPoly::one();
    let g = &x1 + &LaurentPoly::constant(2);
    assert!(matches!(f.exact_div(&g), Err(Error::NotDivisible)));
    assert!(matches!(
        f.exact_div(&LaurentPoly::zero()),
        Err(Error::ZeroInput)
    ));
}
