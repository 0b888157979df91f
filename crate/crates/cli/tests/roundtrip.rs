use proptest::prelude::*;

use suq2_cli::parse::{parse_element, parse_scalar};
use suq2_core::{AlgebraElement, BasisIndex, Scalar};

fn scalar() -> impl Strategy<Value = Scalar> {
    (
        prop::collection::vec((-3i64..=3, -4i64..=4), 1..3),
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(terms, odd, divide)| {
            let mut s = terms
                .into_iter()
                .fold(Scalar::from_int(0), |acc, (c, e)| &acc + &Scalar::q_term(c, e));
            if odd {
                s = &s * &Scalar::u_pow(1);
            }
            if divide {
                let den = &Scalar::from_int(1) - &Scalar::q_pow(2);
                s = s.checked_div(&den).unwrap();
            }
            s
        })
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec(((-3i64..=3, 0u32..=3, 0u32..=3), scalar()), 0..5).prop_map(|terms| {
        let mut x = AlgebraElement::scalar(Scalar::from_int(0));
        for ((k, n, m), c) in terms {
            x.add_term(BasisIndex::new(k, n, m), c);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rendered_elements_parse_back(x in element()) {
        let text = x.to_string();
        prop_assert_eq!(parse_element(&text).unwrap(), x, "{}", text);
    }

    #[test]
    fn rendered_scalars_parse_back(c in scalar()) {
        let text = c.to_string();
        prop_assert_eq!(parse_scalar(&text).unwrap(), c, "{}", text);
    }
}
