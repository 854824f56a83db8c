use macdonald::rq::{gcd, IntPoly2};
use macdonald::RatFun;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = IntPoly2> {
    prop::collection::vec((-20i64..=20, 0usize..=4, 0usize..=4), 0..6).prop_map(|terms| {
        terms.into_iter().map(|(c, a, b)| IntPoly2::monomial(c, a, b)).fold(IntPoly2::zero(), |acc, m| &acc + &m)
    })
}

fn nonzero_poly() -> impl Strategy<Value = IntPoly2> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_divides_and_absorbs_common_factor(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let ac = &a * &c;
        let bc = &b * &c;
        let g = gcd(&ac, &bc);
        prop_assert!(ac.divexact(&g).is_some());
        prop_assert!(bc.divexact(&g).is_some());
        prop_assert!(g.divexact(&c).is_some() || g.divexact(&(-&c)).is_some());
    }

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn display_parses_back(a in ratfun()) {
        prop_assert_eq!(a.to_string().parse::<RatFun>().unwrap(), a.clone());
        prop_assert_eq!(a.to_plain().parse::<RatFun>().unwrap(), a);
    }
}
