use proptest::prelude::*;

use suq2_core::dual::{func_eval, Functional, Named};
use suq2_core::hopf::{antipode, counit, delta};
use suq2_core::{AlgebraElement, BasisIndex, Scalar};

fn index() -> impl Strategy<Value = BasisIndex> {
    (-2i64..=2, 0u32..=2, 0u32..=2).prop_map(|(k, n, m)| BasisIndex::new(k, n, m))
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((index(), -3i64..=3, -2i64..=2), 1..3).prop_map(|terms| {
        let mut x = AlgebraElement::scalar(Scalar::from_int(0));
        for (idx, c, e) in terms {
            x.add_term(idx, Scalar::q_term(c, e));
        }
        x
    })
}

fn named() -> impl Strategy<Value = Functional> {
    prop::sample::select(Named::ALL.to_vec()).prop_map(Functional::Named)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn adjoint_is_antimultiplicative(x in element(), y in element()) {
        prop_assert_eq!((&x * &y).adjoint(), &y.adjoint() * &x.adjoint());
        prop_assert_eq!(x.adjoint().adjoint(), x);
    }

    #[test]
    fn antipode_is_antimultiplicative(x in element(), y in element()) {
        prop_assert_eq!(antipode(&(&x * &y)), &antipode(&y) * &antipode(&x));
    }

    #[test]
    fn coproduct_is_multiplicative(x in element(), y in element()) {
        prop_assert_eq!(delta(&(&x * &y)), delta(&x).mul(&delta(&y)));
    }

    #[test]
    fn counit_is_the_eps_functional(x in element()) {
        prop_assert_eq!(func_eval(&Functional::Named(Named::Eps), &x), counit(&x));
    }

    #[test]
    fn convolution_is_associative(f in named(), g in named(), h in named(), idx in index()) {
        let lhs = f.conv(&g).conv(&h);
        let rhs = f.conv(&g.conv(&h));
        prop_assert_eq!(lhs.eval_basis(idx), rhs.eval_basis(idx));
    }

    #[test]
    fn eps_is_the_convolution_unit(f in named(), idx in index()) {
        let eps = Functional::Named(Named::Eps);
        prop_assert_eq!(eps.conv(&f).eval_basis(idx), f.eval_basis(idx));
        prop_assert_eq!(f.conv(&eps).eval_basis(idx), f.eval_basis(idx));
    }

    #[test]
    fn star_is_an_antimultiplicative_involution(f in named(), g in named(), idx in index()) {
        prop_assert_eq!(f.star().star().eval_basis(idx), f.eval_basis(idx));
        prop_assert_eq!(
            f.conv(&g).star().eval_basis(idx),
            g.star().conv(&f.star()).eval_basis(idx)
        );
    }
}

#[test]
fn f0_equals_f2() {
    let (f0, f2) = (Functional::Named(Named::F0), Functional::Named(Named::F2));
    assert!(f0.agrees_on_grid(&f2, 3));
}
