//! Checks that do not go through the rewriting engine.
//!
//! * the faithful representation on `l^2(N x Z)` with basis `e_{r,s}`, where
//!   `a e_{r,s} = sqrt(1 - q^{2r}) e_{r-1,s}` and `c e_{r,s} = q^r e_{r,s+1}`;
//! * the circle characters `theta_zeta` (`a -> zeta`, `c -> 0`);
//! * the morphism `pi` onto Laurent polynomials in `z` (`a -> z`, `c -> 0`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, BasisIndex};
use crate::error::ScalarError;
use crate::hopf;
use crate::scalars::{Rational, Scalar};

/// Sorted list of `j >= 1`, meaning `prod_j sqrt(1 - q0^{2j})`.
/// Repeated factors are folded into the rational part, so entries are distinct.
pub type Radical = Vec<u64>;

/// A vector of the l^2 representation: `(r, s) -> sum_radical rational * radical`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct L2Vector {
    entries: BTreeMap<(u64, i64), BTreeMap<Radical, Rational>>,
}

impl L2Vector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(r: u64, s: i64) -> Self {
        let mut v = Self::zero();
        v.add(r, s, Vec::new(), Rational::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &BTreeMap<(u64, i64), BTreeMap<Radical, Rational>> {
        &self.entries
    }

    /// Coefficient at `e_{r,s}` as `(rational, radical)` pairs.
    pub fn coeff(&self, r: u64, s: i64) -> Vec<(Rational, Radical)> {
        self.entries
            .get(&(r, s))
            .map(|m| m.iter().map(|(rad, c)| (c.clone(), rad.clone())).collect())
            .unwrap_or_default()
    }

    fn add(&mut self, r: u64, s: i64, radical: Radical, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry((r, s)).or_default();
        let sum = slot.remove(&radical).unwrap_or_else(Rational::zero) + c;
        if !sum.is_zero() {
            slot.insert(radical, sum);
        }
        if slot.is_empty() {
            self.entries.remove(&(r, s));
        }
    }
}

fn q0_pow(q0: &Rational, e: u64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= q0;
    }
    acc
}

/// Multiplies two radicals, extracting squared factors as a rational.
fn merge_radicals(a: &[u64], b: &[u64], q0: &Rational) -> (Rational, Radical) {
    let mut all: Vec<u64> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    let mut factor = Rational::one();
    let mut out = Vec::new();
    let mut i = 0;
    while i < all.len() {
        if i + 1 < all.len() && all[i] == all[i + 1] {
            factor *= Rational::one() - q0_pow(q0, 2 * all[i]);
            i += 2;
        } else {
            out.push(all[i]);
            i += 1;
        }
    }
    (factor, out)
}

/// Radical picked up by `a^k` (or `a*^{-k}`) acting on level `r`, or `None`
/// if the action annihilates the vector.
fn alpha_radical(k: i64, r: u64) -> Option<Radical> {
    if k >= 0 {
        let k = k as u64;
        if k > r {
            return None;
        }
        Some((r - k + 1..=r).collect())
    } else {
        let j = k.unsigned_abs();
        Some((r + 1..=r + j).collect())
    }
}

/// Applies `x` to the basis vector `e_{r,s}` at `q = q0`.
pub fn l2_apply(x: &AlgebraElement, r: u64, s: i64, q0: &Rational) -> Result<L2Vector, ScalarError> {
    l2_apply_vec(x, &L2Vector::basis(r, s), q0)
}

/// Applies `x` to an arbitrary vector.
pub fn l2_apply_vec(x: &AlgebraElement, v: &L2Vector, q0: &Rational) -> Result<L2Vector, ScalarError> {
    let mut out = L2Vector::zero();
    for (idx, c) in x.iter() {
        let c = c.eval(q0)?;
        for (&(r, s), comps) in &v.entries {
            let Some(rad) = alpha_radical(idx.k, r) else {
                continue;
            };
            let target_r = (r as i64 - idx.k) as u64;
            let target_s = s + idx.m as i64 - idx.n as i64;
            let gamma_factor = q0_pow(q0, r * (idx.n + idx.m) as u64);
            for (vrad, vc) in comps {
                let (extra, merged) = merge_radicals(vrad, &rad, q0);
                out.add(target_r, target_s, merged, &c * &gamma_factor * vc * extra);
            }
        }
    }
    Ok(out)
}

/// Number of levels `r = 0..=R` probed by [`oracle_equal`].
pub fn oracle_depth(x: &AlgebraElement) -> u64 {
    x.max_abs_k() + x.len() as u64 + 2
}

/// Decides `x == y` through the l^2 representation at `q = q0`.
///
/// For a fixed output offset the residual is a sparse polynomial in `q0^r`
/// with at most `#terms` monomials, so `#terms` nonvanishing sample levels
/// beyond `|k|` settle it.
pub fn oracle_equal(x: &AlgebraElement, y: &AlgebraElement, q0: &Rational) -> Result<bool, ScalarError> {
    let diff = x - y;
    for r in 0..=oracle_depth(&diff) {
        if !l2_apply(&diff, r, 0, q0)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An element `re + i * im` of `Q(u)[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl GaussianScalar {
    pub fn zero() -> Self {
        GaussianScalar {
            re: Scalar::zero(),
            im: Scalar::zero(),
        }
    }

    pub fn from_root(root: FourthRoot) -> Self {
        let (re, im) = match root.0 % 4 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        GaussianScalar {
            re: Scalar::from_int(re),
            im: Scalar::from_int(im),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GaussianScalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        GaussianScalar {
            re: &self.re * c,
            im: &self.im * c,
        }
    }
}

impl Mul for &GaussianScalar {
    type Output = GaussianScalar;
    fn mul(self, rhs: &GaussianScalar) -> GaussianScalar {
        GaussianScalar {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl fmt::Display for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + i*({})", self.re, self.im)
    }
}

/// The fourth root of unity `i^p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FourthRoot(pub u8);

impl FourthRoot {
    pub const ALL: [FourthRoot; 4] = [FourthRoot(0), FourthRoot(1), FourthRoot(2), FourthRoot(3)];

    pub fn pow(self, k: i64) -> FourthRoot {
        FourthRoot((self.0 as i64 * k).rem_euclid(4) as u8)
    }

    pub fn mul(self, other: FourthRoot) -> FourthRoot {
        FourthRoot((self.0 + other.0) % 4)
    }
}

/// Exact value of the character `theta_zeta` at `x`, for `zeta` a fourth root
/// of unity. Coefficients stay symbolic.
pub fn theta_eval(x: &AlgebraElement, zeta: FourthRoot) -> GaussianScalar {
    let mut acc = GaussianScalar::zero();
    for (idx, c) in x.iter() {
        if idx.n == 0 && idx.m == 0 {
            acc = acc.add(&GaussianScalar::from_root(zeta.pow(idx.k)).scale(c));
        }
    }
    acc
}

/// Floating-point value of `theta_zeta(x)` at `q = q0`, for any `zeta` on the
/// unit circle.
pub fn theta_eval_f64(x: &AlgebraElement, zeta: Complex64, q0: f64) -> Complex64 {
    let mut acc = Complex64::zero();
    for (idx, c) in x.iter() {
        if idx.n == 0 && idx.m == 0 {
            acc += zeta.powi(idx.k as i32) * c.eval_f64(q0);
        }
    }
    acc
}

/// `(theta_zeta * theta_eta)(x) = (theta_zeta ⊗ theta_eta) Delta(x)`.
pub fn theta_convolve(zeta: FourthRoot, eta: FourthRoot, x: &AlgebraElement) -> GaussianScalar {
    let mut acc = GaussianScalar::zero();
    for ([l, r], c) in hopf::delta(x).iter() {
        if l.n != 0 || l.m != 0 || r.n != 0 || r.m != 0 {
            continue;
        }
        let v = &GaussianScalar::from_root(zeta.pow(l.k)) * &GaussianScalar::from_root(eta.pow(r.k));
        acc = acc.add(&v.scale(c));
    }
    acc
}

/// Laurent polynomial in `z` with `Scalar` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CirclePoly {
    terms: BTreeMap<i64, Scalar>,
}

impl CirclePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: Scalar, power: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(power, c);
        p
    }

    pub fn terms(&self) -> &BTreeMap<i64, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, power: i64) -> Scalar {
        self.terms.get(&power).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, power: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.remove(&power).unwrap_or_else(Scalar::zero) + c;
        if !sum.is_zero() {
            self.terms.insert(power, sum);
        }
    }
}

impl Mul for &CirclePoly {
    type Output = CirclePoly;
    fn mul(self, rhs: &CirclePoly) -> CirclePoly {
        let mut out = CirclePoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for CirclePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("({c}) z^{p}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `pi(A_{k,n,m}) = z^k` if `n = m = 0`, else `0`.
pub fn pi_map(x: &AlgebraElement) -> CirclePoly {
    let mut out = CirclePoly::zero();
    for (idx, c) in x.iter() {
        if idx.n == 0 && idx.m == 0 {
            out.add_term(idx.k, c.clone());
        }
    }
    out
}

/// Convenience: `pi` of a single basis monomial.
pub fn pi_basis(idx: BasisIndex) -> CirclePoly {
    pi_map(&AlgebraElement::basis(idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn alpha_kills_the_ground_level() {
        assert!(l2_apply(&AlgebraElement::alpha(), 0, 0, &rat(1, 2)).unwrap().is_zero());
    }

    #[test]
    fn gamma_scales_by_q_power() {
        let v = l2_apply(&AlgebraElement::gamma(), 2, 0, &rat(1, 2)).unwrap();
        assert_eq!(v, {
            let mut e = L2Vector::zero();
            e.add(2, 1, Vec::new(), rat(1, 4));
            e
        });
    }

    #[test]
    fn identity_acts_trivially() {
        let v = l2_apply(&AlgebraElement::one(), 3, -2, &rat(1, 3)).unwrap();
        assert_eq!(v, L2Vector::basis(3, -2));
    }

    #[test]
    fn oracle_equality() {
        let q0 = rat(1, 2);
        let a = AlgebraElement::alpha();
        let c = AlgebraElement::gamma();
        let lhs = &(&a.adjoint() * &a) + &(&c.adjoint() * &c);
        assert!(oracle_equal(&lhs, &AlgebraElement::one(), &q0).unwrap());
        assert!(oracle_equal(&a, &a, &rat(2, 3)).unwrap());
        assert!(!oracle_equal(&(&a * &c), &(&c * &a), &q0).unwrap());
    }

    #[test]
    fn characters() {
        let a2 = AlgebraElement::alpha().pow(2);
        let v = theta_eval(&a2, FourthRoot(2));
        assert_eq!(v.re, Scalar::one());
        assert!(v.im.is_zero());
        let n = &AlgebraElement::gamma_star() * &AlgebraElement::gamma();
        assert_eq!(theta_eval(&n, FourthRoot(1)), GaussianScalar::zero());
        let conv = theta_convolve(FourthRoot(1), FourthRoot(1), &AlgebraElement::alpha());
        assert_eq!(conv.re, Scalar::from_int(-1));
        assert!(conv.im.is_zero());
    }

    #[test]
    fn float_characters_match_exact_ones() {
        let x = &AlgebraElement::alpha().pow(3) + &AlgebraElement::alpha_star().scale(&Scalar::q());
        let exact = theta_eval(&x, FourthRoot(1));
        let approx = theta_eval_f64(&x, Complex64::new(0.0, 1.0), 0.5);
        assert!((approx.re - exact.re.eval_f64(0.5)).abs() < 1e-12);
        assert!((approx.im - exact.im.eval_f64(0.5)).abs() < 1e-12);
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_map(&AlgebraElement::alpha_star()), CirclePoly::monomial(Scalar::one(), -1));
        assert_eq!(pi_basis(BasisIndex::new(3, 0, 0)), CirclePoly::monomial(Scalar::one(), 3));
        assert!(pi_map(&AlgebraElement::gamma_star()).is_zero());
    }
}
