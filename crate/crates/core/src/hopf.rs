//! Comultiplication, counit and antipode, with executable Hopf axioms.
//!
//! ```text
//! Delta(a) = a ⊗ a - q c* ⊗ c        Delta(c) = c ⊗ a + a* ⊗ c
//! eps(a) = 1, eps(c) = 0
//! S(a) = a*, S(a*) = a, S(c) = -q c, S(c*) = -q^-1 c*
//! ```

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{AlgebraElement, BasisIndex, Gen, Tensor, TensorElement};
use crate::scalars::Scalar;

fn gen_delta(g: Gen) -> TensorElement {
    let a = AlgebraElement::alpha();
    let a_s = AlgebraElement::alpha_star();
    let c = AlgebraElement::gamma();
    let c_s = AlgebraElement::gamma_star();
    let mq = -Scalar::q();
    match g {
        Gen::Alpha => &TensorElement::pure([&a, &a]) + &TensorElement::pure([&c_s, &c]).scale(&mq),
        Gen::AlphaStar => {
            &TensorElement::pure([&a_s, &a_s]) + &TensorElement::pure([&c, &c_s]).scale(&mq)
        }
        Gen::Gamma => &TensorElement::pure([&c, &a]) + &TensorElement::pure([&a_s, &c]),
        Gen::GammaStar => &TensorElement::pure([&c_s, &a_s]) + &TensorElement::pure([&a, &c_s]),
    }
}

type DeltaCache = RwLock<HashMap<BasisIndex, Arc<TensorElement>>>;

fn cache() -> &'static DeltaCache {
    static CACHE: OnceLock<DeltaCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Delta(A_{k,n,m})`, memoized. Built by peeling the last generator off the
/// normal-order word, so every prefix lands in the cache too.
pub fn delta_basis(idx: BasisIndex) -> Arc<TensorElement> {
    if let Some(hit) = cache().read().expect("delta cache poisoned").get(&idx) {
        return hit.clone();
    }
    let value = if idx.is_identity() {
        TensorElement::one()
    } else {
        let (prefix, last) = if idx.m > 0 {
            (BasisIndex::new(idx.k, idx.n, idx.m - 1), Gen::Gamma)
        } else if idx.n > 0 {
            (BasisIndex::new(idx.k, idx.n - 1, 0), Gen::GammaStar)
        } else if idx.k > 0 {
            (BasisIndex::new(idx.k - 1, 0, 0), Gen::Alpha)
        } else {
            (BasisIndex::new(idx.k + 1, 0, 0), Gen::AlphaStar)
        };
        delta_basis(prefix).mul(&gen_delta(last))
    };
    let value = Arc::new(value);
    cache()
        .write()
        .expect("delta cache poisoned")
        .insert(idx, value.clone());
    value
}

/// The comultiplication, an algebra homomorphism into the tensor square.
pub fn delta(x: &AlgebraElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (idx, c) in x.iter() {
        for (key, d) in delta_basis(*idx).iter() {
            out.add_term(*key, c * d);
        }
    }
    out
}

/// `(Delta ⊗ id)`.
pub fn delta_left(t: &TensorElement) -> Tensor<3> {
    let mut out = Tensor::<3>::zero();
    for ([l, r], c) in t.iter() {
        for ([a, b], d) in delta_basis(*l).iter() {
            out.add_term([*a, *b, *r], c * d);
        }
    }
    out
}

/// `(id ⊗ Delta)`.
pub fn delta_right(t: &TensorElement) -> Tensor<3> {
    let mut out = Tensor::<3>::zero();
    for ([l, r], c) in t.iter() {
        for ([a, b], d) in delta_basis(*r).iter() {
            out.add_term([*l, *a, *b], c * d);
        }
    }
    out
}

pub fn counit_basis(idx: &BasisIndex) -> Scalar {
    if idx.n == 0 && idx.m == 0 {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

pub fn counit(x: &AlgebraElement) -> Scalar {
    x.iter()
        .filter(|(idx, _)| idx.n == 0 && idx.m == 0)
        .fold(Scalar::zero(), |acc, (_, c)| acc + c)
}

/// `S(A_{k,n,m}) = S(c)^m S(c*)^n S(a)^k`.
pub fn antipode_basis(idx: BasisIndex) -> AlgebraElement {
    let sign = if (idx.n + idx.m).is_multiple_of(2) { 1 } else { -1 };
    let coeff = Scalar::from_int(sign) * Scalar::q_pow(idx.m as i64 - idx.n as i64);
    let gammas = AlgebraElement::term(coeff, BasisIndex::new(0, idx.n, idx.m));
    &gammas * &AlgebraElement::basis(BasisIndex::new(-idx.k, 0, 0))
}

/// The antipode, a linear antihomomorphism.
pub fn antipode(x: &AlgebraElement) -> AlgebraElement {
    x.map_linear(|idx| antipode_basis(*idx))
}

/// `(eps ⊗ id)`.
pub fn counit_left(t: &TensorElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for ([l, r], c) in t.iter() {
        out.add_term(*r, c * &counit_basis(l));
    }
    out
}

/// `(id ⊗ eps)`.
pub fn counit_right(t: &TensorElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for ([l, r], c) in t.iter() {
        out.add_term(*l, c * &counit_basis(r));
    }
    out
}

/// `m (S ⊗ id)`.
pub fn mult_antipode_left(t: &TensorElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for ([l, r], c) in t.iter() {
        let p = &antipode_basis(*l) * &AlgebraElement::basis(*r);
        out = &out + &p.scale(c);
    }
    out
}

/// `m (id ⊗ S)`.
pub fn mult_antipode_right(t: &TensorElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for ([l, r], c) in t.iter() {
        let p = &AlgebraElement::basis(*l) * &antipode_basis(*r);
        out = &out + &p.scale(c);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub coassoc: bool,
    pub counit_left: bool,
    pub counit_right: bool,
    pub antipode_left: bool,
    pub antipode_right: bool,
    pub s_square: bool,
}

impl HopfReport {
    pub fn all(&self) -> bool {
        self.coassoc
            && self.counit_left
            && self.counit_right
            && self.antipode_left
            && self.antipode_right
            && self.s_square
    }

    /// Name of the first identity that fails, if any.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.coassoc, "coassociativity"),
            (self.counit_left, "(eps ⊗ id) Delta = id"),
            (self.counit_right, "(id ⊗ eps) Delta = id"),
            (self.antipode_left, "m (S ⊗ id) Delta = eps"),
            (self.antipode_right, "m (id ⊗ S) Delta = eps"),
            (self.s_square, "S(S(x*)*) = x"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

/// Checks every Hopf-algebra identity on `x`, exactly.
pub fn hopf_axiom_check(x: &AlgebraElement) -> HopfReport {
    let dx = delta(x);
    let unit = AlgebraElement::scalar(counit(x));
    HopfReport {
        coassoc: delta_left(&dx) == delta_right(&dx),
        counit_left: counit_left(&dx) == *x,
        counit_right: counit_right(&dx) == *x,
        antipode_left: mult_antipode_left(&dx) == unit,
        antipode_right: mult_antipode_right(&dx) == unit,
        s_square: antipode(&antipode(&x.adjoint()).adjoint()) == *x,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocancelReport {
    pub alpha_identity: bool,
    pub gamma_identity: bool,
}

/// `a ⊗ 1 - [Delta(a)(1 ⊗ a*) + coeff * Delta(c*)(1 ⊗ c)]`; zero for `coeff = q^2`.
pub fn alpha_cocancel_residual(coeff: &Scalar) -> TensorElement {
    let one = AlgebraElement::one();
    let lhs = TensorElement::pure([&AlgebraElement::alpha(), &one]);
    let t1 = delta(&AlgebraElement::alpha())
        .mul(&TensorElement::pure([&one, &AlgebraElement::alpha_star()]));
    let t2 = delta(&AlgebraElement::gamma_star())
        .mul(&TensorElement::pure([&one, &AlgebraElement::gamma()]))
        .scale(coeff);
    &lhs - &(&t1 + &t2)
}

/// `c ⊗ 1 - [Delta(c)(1 ⊗ a*) - q Delta(a*)(1 ⊗ c)]`.
pub fn gamma_cocancel_residual() -> TensorElement {
    let one = AlgebraElement::one();
    let lhs = TensorElement::pure([&AlgebraElement::gamma(), &one]);
    let t1 = delta(&AlgebraElement::gamma())
        .mul(&TensorElement::pure([&one, &AlgebraElement::alpha_star()]));
    let t2 = delta(&AlgebraElement::alpha_star())
        .mul(&TensorElement::pure([&one, &AlgebraElement::gamma()]))
        .scale(&-Scalar::q());
    &lhs - &(&t1 + &t2)
}

/// The two cocancellation identities expressing `a ⊗ 1` and `c ⊗ 1` through
/// `Delta(SU_q^0(2))(1 ⊗ SU_q^0(2))`.
pub fn cocancel_witness() -> CocancelReport {
    CocancelReport {
        alpha_identity: alpha_cocancel_residual(&Scalar::q_pow(2)).is_zero(),
        gamma_identity: gamma_cocancel_residual().is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_on_generators() {
        let a = AlgebraElement::alpha();
        let expected = &TensorElement::pure([&a, &a])
            + &TensorElement::pure([&AlgebraElement::gamma_star(), &AlgebraElement::gamma()])
                .scale(&-Scalar::q());
        assert_eq!(delta(&a), expected);
        assert_eq!(delta(&AlgebraElement::one()), TensorElement::one());
        // slotwise adjoint of Delta(c)
        assert_eq!(
            delta(&AlgebraElement::gamma_star()),
            delta(&AlgebraElement::gamma()).adjoint()
        );
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&AlgebraElement::alpha().pow(3)), Scalar::one());
        let n = &AlgebraElement::gamma_star() * &AlgebraElement::gamma();
        assert!(counit(&n).is_zero());
        let x = &AlgebraElement::one() + &AlgebraElement::gamma().scale(&Scalar::q());
        assert_eq!(counit(&x), Scalar::one());
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&AlgebraElement::alpha().pow(2)), AlgebraElement::alpha_star().pow(2));
        let n = &AlgebraElement::gamma_star() * &AlgebraElement::gamma();
        assert_eq!(antipode(&n), n);
        assert_eq!(antipode(&AlgebraElement::one()), AlgebraElement::one());
        assert_eq!(
            antipode(&AlgebraElement::gamma_star()),
            AlgebraElement::gamma_star().scale(&-Scalar::q_pow(-1))
        );
    }

    #[test]
    fn axioms_on_small_elements() {
        assert!(hopf_axiom_check(&AlgebraElement::alpha()).all());
        assert!(hopf_axiom_check(&AlgebraElement::one()).all());
        assert!(hopf_axiom_check(&AlgebraElement::basis(BasisIndex::new(2, 1, 1))).all());
    }

    #[test]
    fn cocancellation() {
        let r = cocancel_witness();
        assert!(r.alpha_identity && r.gamma_identity);
        assert!(!alpha_cocancel_residual(&Scalar::q()).is_zero());
    }
}
