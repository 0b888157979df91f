//! The *-algebra SU_q^0(2) in normal form.
//!
//! Elements are finite linear combinations of the basis monomials
//! `A_{k,n,m} = a^k c*^n c^m` (with `a*^{-k}` in place of `a^k` when `k < 0`),
//! where `a` is the generator alpha and `c` is gamma. Products are brought
//! back to normal form with the q-commutation relations
//!
//! ```text
//! a* a = 1 - c* c        a a* = 1 - q^2 c* c       c* c = c c*
//! c a  = q^-1 a c        c* a = q^-1 a c*
//! c a* = q a* c          c* a* = q a* c*
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::matrix::Matrix;
use crate::scalars::Scalar;

/// Index `(k, n, m)` of the basis monomial `A_{k,n,m}`.
///
/// Ordered lexicographically by `(k, n, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisIndex {
    pub k: i64,
    pub n: u32,
    pub m: u32,
}

impl BasisIndex {
    pub const IDENTITY: BasisIndex = BasisIndex { k: 0, n: 0, m: 0 };

    pub const fn new(k: i64, n: u32, m: u32) -> Self {
        BasisIndex { k, n, m }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// The generator word spelling this monomial in normal order.
    pub fn word(&self) -> Vec<Gen> {
        let a = if self.k >= 0 { Gen::Alpha } else { Gen::AlphaStar };
        let mut w = vec![a; self.k.unsigned_abs() as usize];
        w.extend(std::iter::repeat_n(Gen::GammaStar, self.n as usize));
        w.extend(std::iter::repeat_n(Gen::Gamma, self.m as usize));
        w
    }

    /// All indices with `|k| <= bound`, `n <= bound`, `m <= bound`.
    pub fn grid(bound: u32) -> impl Iterator<Item = BasisIndex> {
        let b = bound as i64;
        (-b..=b).flat_map(move |k| {
            (0..=bound).flat_map(move |n| (0..=bound).map(move |m| BasisIndex::new(k, n, m)))
        })
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let push = |parts: &mut Vec<String>, sym: &str, e: u64| match e {
            0 => {}
            1 => parts.push(sym.to_string()),
            e => parts.push(format!("{sym}^{e}")),
        };
        if self.k >= 0 {
            push(&mut parts, "a", self.k as u64);
        } else {
            push(&mut parts, "a*", self.k.unsigned_abs());
        }
        push(&mut parts, "c*", self.n as u64);
        push(&mut parts, "c", self.m as u64);
        write!(f, "{}", parts.join(" "))
    }
}

/// The four generators alpha, alpha*, gamma, gamma*.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Alpha,
    AlphaStar,
    Gamma,
    GammaStar,
}

impl Gen {
    pub fn star(self) -> Gen {
        match self {
            Gen::Alpha => Gen::AlphaStar,
            Gen::AlphaStar => Gen::Alpha,
            Gen::Gamma => Gen::GammaStar,
            Gen::GammaStar => Gen::Gamma,
        }
    }

    pub fn index(self) -> BasisIndex {
        match self {
            Gen::Alpha => BasisIndex::new(1, 0, 0),
            Gen::AlphaStar => BasisIndex::new(-1, 0, 0),
            Gen::GammaStar => BasisIndex::new(0, 1, 0),
            Gen::Gamma => BasisIndex::new(0, 0, 1),
        }
    }

    // Position in the normal-order word: alpha block, then gamma*, then gamma.
    fn rank(self) -> u8 {
        match self {
            Gen::Alpha | Gen::AlphaStar => 0,
            Gen::GammaStar => 1,
            Gen::Gamma => 2,
        }
    }

    pub const ALL: [Gen; 4] = [Gen::Alpha, Gen::AlphaStar, Gen::Gamma, Gen::GammaStar];
}

/// A finite linear combination of basis monomials with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<BasisIndex, Scalar>,
}

impl AlgebraElement {
    pub fn basis(idx: BasisIndex) -> Self {
        Self::term(Scalar::one(), idx)
    }

    pub fn term(c: Scalar, idx: BasisIndex) -> Self {
        let mut x = Self::zero();
        x.add_term(idx, c);
        x
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::term(c, BasisIndex::IDENTITY)
    }

    pub fn gen(g: Gen) -> Self {
        Self::basis(g.index())
    }

    pub fn alpha() -> Self {
        Self::gen(Gen::Alpha)
    }

    pub fn alpha_star() -> Self {
        Self::gen(Gen::AlphaStar)
    }

    pub fn gamma() -> Self {
        Self::gen(Gen::Gamma)
    }

    pub fn gamma_star() -> Self {
        Self::gen(Gen::GammaStar)
    }

    pub fn terms(&self) -> &BTreeMap<BasisIndex, Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &BasisIndex) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c * A_idx`, pruning a vanishing coefficient.
    pub fn add_term(&mut self, idx: BasisIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    /// Applies a linear map defined on basis monomials.
    pub fn map_linear(&self, mut f: impl FnMut(&BasisIndex) -> AlgebraElement) -> Self {
        let mut out = Self::zero();
        for (idx, c) in &self.terms {
            for (j, d) in f(idx).terms {
                out.add_term(j, c * &d);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The involution: antimultiplicative, conjugate-linear (the coefficient
    /// field is real so coefficients pass through `Scalar::conj`).
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for (idx, c) in &self.terms {
            for (j, d) in adjoint_basis(*idx).terms {
                out.add_term(j, &c.conj() * &d);
            }
        }
        out
    }

    /// Largest `|k|` over the support.
    pub fn max_abs_k(&self) -> u64 {
        self.terms.keys().map(|i| i.k.unsigned_abs()).max().unwrap_or(0)
    }
}

/// `(a^k c*^n c^m)* = c*^m c^n (a^k)*`.
fn adjoint_basis(idx: BasisIndex) -> AlgebraElement {
    let gammas = BasisIndex::new(0, idx.m, idx.n);
    let alphas = BasisIndex::new(-idx.k, 0, 0);
    mul_basis(gammas, alphas)
}

/// Normal form of `(1 - s_0 N)(1 - s_1 N)...` as coefficients of `N^p`.
fn n_polynomial(factors: impl Iterator<Item = Scalar>) -> Vec<Scalar> {
    let mut poly = vec![Scalar::one()];
    for s in factors {
        let mut next = poly.clone();
        next.push(Scalar::zero());
        for (p, c) in poly.iter().enumerate() {
            next[p + 1] = &next[p + 1] - &(c * &s);
        }
        poly = next;
    }
    poly
}

/// Product of two basis monomials in normal form.
///
/// The gamma block of the left factor moves past the alpha block of the
/// right factor picking up `q^{-(n1+m1) k2}`; the alpha blocks then combine,
/// with mixed signs collapsing through `a a* = 1 - q^2 N` and
/// `a* a = 1 - N` where `N = c* c`.
pub fn mul_basis(x: BasisIndex, y: BasisIndex) -> AlgebraElement {
    let twist = Scalar::q_pow(-((x.n + x.m) as i64) * y.k);
    let (k1, k2) = (x.k, y.k);
    let n_poly = if k1 > 0 && k2 < 0 {
        let (a, b) = (k1, -k2);
        let j = a.min(b);
        n_polynomial((0..j).map(|i| Scalar::q_pow(2 * (b - i))))
    } else if k1 < 0 && k2 > 0 {
        let (a, b) = (-k1, k2);
        let j = a.min(b);
        n_polynomial((0..j).map(|i| Scalar::q_pow(-2 * (b - 1 - i))))
    } else {
        vec![Scalar::one()]
    };
    let k = k1 + k2;
    let mut out = AlgebraElement::zero();
    for (p, c) in n_poly.into_iter().enumerate() {
        let p = p as u32;
        out.add_term(BasisIndex::new(k, p + x.n + y.n, p + x.m + y.m), &twist * &c);
    }
    out
}

/// Which adjacent redex the rewriting engine reduces first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RedexOrder {
    Leftmost,
    Rightmost,
}

fn is_redex(x: Gen, y: Gen) -> bool {
    x.rank() > y.rank() || matches!((x, y), (Gen::AlphaStar, Gen::Alpha) | (Gen::Alpha, Gen::AlphaStar))
}

/// One rewriting step on the pair `x y`.
fn rewrite_pair(x: Gen, y: Gen) -> Vec<(Scalar, Vec<Gen>)> {
    use Gen::*;
    match (x, y) {
        (Gamma, Alpha) => vec![(Scalar::q_pow(-1), vec![Alpha, Gamma])],
        (GammaStar, Alpha) => vec![(Scalar::q_pow(-1), vec![Alpha, GammaStar])],
        (Gamma, AlphaStar) => vec![(Scalar::q(), vec![AlphaStar, Gamma])],
        (GammaStar, AlphaStar) => vec![(Scalar::q(), vec![AlphaStar, GammaStar])],
        (Gamma, GammaStar) => vec![(Scalar::one(), vec![GammaStar, Gamma])],
        (AlphaStar, Alpha) => vec![
            (Scalar::one(), vec![]),
            (Scalar::from_int(-1), vec![GammaStar, Gamma]),
        ],
        (Alpha, AlphaStar) => vec![
            (Scalar::one(), vec![]),
            (-Scalar::q_pow(2), vec![GammaStar, Gamma]),
        ],
        _ => unreachable!("({x:?}, {y:?}) is not a redex"),
    }
}

fn sorted_word_index(word: &[Gen]) -> BasisIndex {
    let mut idx = BasisIndex::IDENTITY;
    for g in word {
        match g {
            Gen::Alpha => idx.k += 1,
            Gen::AlphaStar => idx.k -= 1,
            Gen::GammaStar => idx.n += 1,
            Gen::Gamma => idx.m += 1,
        }
    }
    idx
}

/// Normal form of `prefactor * w_1 w_2 ... w_r` by word rewriting.
pub fn normalize_word(prefactor: &Scalar, word: &[Gen]) -> AlgebraElement {
    normalize_word_with(prefactor, word, RedexOrder::Leftmost)
}

/// [`normalize_word`] with an explicit choice of redex; the normal form is
/// independent of the choice.
pub fn normalize_word_with(prefactor: &Scalar, word: &[Gen], order: RedexOrder) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    let mut stack = vec![(prefactor.clone(), word.to_vec())];
    while let Some((c, w)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        let mut positions = 0..w.len().saturating_sub(1);
        let redex = match order {
            RedexOrder::Leftmost => positions.find(|&i| is_redex(w[i], w[i + 1])),
            RedexOrder::Rightmost => positions.rev().find(|&i| is_redex(w[i], w[i + 1])),
        };
        let Some(i) = redex else {
            out.add_term(sorted_word_index(&w), c);
            continue;
        };
        for (s, middle) in rewrite_pair(w[i], w[i + 1]) {
            let mut next = w[..i].to_vec();
            next.extend(middle);
            next.extend_from_slice(&w[i + 2..]);
            stack.push((&c * &s, next));
        }
    }
    out
}

impl Zero for AlgebraElement {
    fn zero() -> Self {
        AlgebraElement {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for AlgebraElement {
    fn one() -> Self {
        Self::basis(BasisIndex::IDENTITY)
    }
}

impl From<Scalar> for AlgebraElement {
    fn from(c: Scalar) -> Self {
        AlgebraElement::scalar(c)
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (idx, c) in &rhs.terms {
            out.add_term(*idx, c.clone());
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (idx, c) in &rhs.terms {
            out.add_term(*idx, -c);
        }
        out
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                let ab = a * b;
                for (idx, c) in mul_basis(*i, *j).terms {
                    out.add_term(idx, &ab * &c);
                }
            }
        }
        out
    }
}

macro_rules! forward_owned_alg {
    ($tr:ident, $m:ident) => {
        impl $tr for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_alg!(Add, add);
forward_owned_alg!(Sub, sub);
forward_owned_alg!(Mul, mul);

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (idx, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (idx.is_identity(), c.is_one()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "({c})")?,
                (false, true) => write!(f, "{idx}")?,
                (false, false) => write!(f, "({c}) * {idx}")?,
            }
        }
        Ok(())
    }
}

/// One term of the JSON rendering of an element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub k: i64,
    pub n: u32,
    pub m: u32,
    pub num: String,
    pub den: String,
}

impl AlgebraElement {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(idx, c)| TermRecord {
                k: idx.k,
                n: idx.n,
                m: idx.m,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }
}

/// An element of the `N`-fold algebraic tensor power, in slotwise normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor<const N: usize> {
    terms: BTreeMap<[BasisIndex; N], Scalar>,
}

pub type TensorElement = Tensor<2>;

impl<const N: usize> Default for Tensor<N> {
    fn default() -> Self {
        Tensor {
            terms: BTreeMap::new(),
        }
    }
}

impl<const N: usize> Tensor<N> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Scalar::one(), [BasisIndex::IDENTITY; N])
    }

    pub fn term(c: Scalar, idx: [BasisIndex; N]) -> Self {
        let mut t = Self::zero();
        t.add_term(idx, c);
        t
    }

    /// The pure tensor `x_1 ⊗ ... ⊗ x_N`.
    pub fn pure(factors: [&AlgebraElement; N]) -> Self {
        let mut acc: Vec<(Scalar, Vec<BasisIndex>)> = vec![(Scalar::one(), Vec::new())];
        for x in factors {
            let mut next = Vec::with_capacity(acc.len() * x.len());
            for (c, prefix) in &acc {
                for (idx, d) in x.iter() {
                    let mut key = prefix.clone();
                    key.push(*idx);
                    next.push((c * d, key));
                }
            }
            acc = next;
        }
        let mut out = Self::zero();
        for (c, key) in acc {
            out.add_term(key.try_into().expect("arity"), c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<[BasisIndex; N], Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[BasisIndex; N], &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: [BasisIndex; N], c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (idx, x) in &self.terms {
            out.add_term(*idx, x * c);
        }
        out
    }

    /// Slotwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, extended bilinearly.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                let slots: Vec<AlgebraElement> =
                    (0..N).map(|s| mul_basis(i[s], j[s])).collect();
                let refs: [&AlgebraElement; N] =
                    std::array::from_fn(|s| &slots[s]);
                let ab = a * b;
                for (idx, c) in Self::pure(refs).terms {
                    out.add_term(idx, &ab * &c);
                }
            }
        }
        out
    }

    /// Slotwise adjoint.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for (idx, c) in &self.terms {
            let slots: Vec<AlgebraElement> =
                idx.iter().map(|i| AlgebraElement::basis(*i).adjoint()).collect();
            let refs: [&AlgebraElement; N] = std::array::from_fn(|s| &slots[s]);
            for (j, d) in Self::pure(refs).terms {
                out.add_term(j, &c.conj() * &d);
            }
        }
        out
    }
}

impl<const N: usize> Add for &Tensor<N> {
    type Output = Tensor<N>;
    fn add(self, rhs: &Tensor<N>) -> Tensor<N> {
        let mut out = self.clone();
        for (idx, c) in &rhs.terms {
            out.add_term(*idx, c.clone());
        }
        out
    }
}

impl<const N: usize> Sub for &Tensor<N> {
    type Output = Tensor<N>;
    fn sub(self, rhs: &Tensor<N>) -> Tensor<N> {
        let mut out = self.clone();
        for (idx, c) in &rhs.terms {
            out.add_term(*idx, -c);
        }
        out
    }
}

impl<const N: usize> Mul for &Tensor<N> {
    type Output = Tensor<N>;
    fn mul(self, rhs: &Tensor<N>) -> Tensor<N> {
        Tensor::mul(self, rhs)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ([l, r], c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) * {l} ⊗ {r}")?;
        }
        Ok(())
    }
}

/// A matrix with entries in the algebra.
pub type AlgMatrix = Matrix<AlgebraElement>;

impl AlgMatrix {
    /// Entrywise adjoint followed by transposition.
    pub fn adjoint_transpose(&self) -> AlgMatrix {
        Matrix::from_fn(self.cols(), self.rows(), |i, j| self.get(j, i).adjoint())
    }
}

/// The fundamental matrix `[[a, -q c*], [c, a*]]`.
pub fn fundamental_matrix() -> AlgMatrix {
    Matrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 0) => AlgebraElement::alpha(),
        (0, 1) => AlgebraElement::gamma_star().scale(&-Scalar::q()),
        (1, 0) => AlgebraElement::gamma(),
        _ => AlgebraElement::alpha_star(),
    })
}

/// Whether `U U*ᵀ = U*ᵀ U = 1` holds exactly in normal form.
pub fn is_unitary(u: &AlgMatrix) -> bool {
    if !u.is_square() {
        return false;
    }
    let id = AlgMatrix::identity(u.rows());
    let ut = u.adjoint_transpose();
    let left = u.try_mul(&ut).map(|p| p == id).unwrap_or(false);
    let right = ut.try_mul(u).map(|p| p == id).unwrap_or(false);
    left && right
}

pub fn check_fundamental_unitary() -> bool {
    is_unitary(&fundamental_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(k: i64, n: u32, m: u32) -> AlgebraElement {
        AlgebraElement::basis(BasisIndex::new(k, n, m))
    }

    #[test]
    fn gamma_alpha_commutes_with_q() {
        let x = normalize_word(&Scalar::one(), &[Gen::Gamma, Gen::Alpha]);
        assert_eq!(x, AlgebraElement::term(Scalar::q_pow(-1), BasisIndex::new(1, 0, 1)));
    }

    #[test]
    fn alpha_star_alpha() {
        let x = normalize_word(&Scalar::one(), &[Gen::AlphaStar, Gen::Alpha]);
        assert_eq!(x, &a(0, 0, 0) - &a(0, 1, 1));
        assert_eq!(&a(-1, 0, 0) * &a(1, 0, 0), x);
    }

    #[test]
    fn alpha_alpha_star() {
        let x = normalize_word(&Scalar::one(), &[Gen::Alpha, Gen::AlphaStar]);
        assert_eq!(x, &a(0, 0, 0) - &a(0, 1, 1).scale(&Scalar::q_pow(2)));
    }

    #[test]
    fn empty_word_is_identity() {
        assert_eq!(normalize_word(&Scalar::one(), &[]), AlgebraElement::one());
    }

    #[test]
    fn alpha_gamma_star() {
        // a c* is already a basis monomial; the relation a c* = q c* a
        // shows up when the product is taken in the other order.
        assert_eq!(&a(1, 0, 0) * &a(0, 1, 0), a(1, 1, 0));
        assert_eq!(
            &a(1, 0, 0) * &a(0, 1, 0),
            (&a(0, 1, 0) * &a(1, 0, 0)).scale(&Scalar::q())
        );
    }

    #[test]
    fn unit_law() {
        let x = &a(2, 1, 3) + &a(-1, 0, 2).scale(&Scalar::q());
        assert_eq!(&x * &AlgebraElement::one(), x);
        assert_eq!(&AlgebraElement::one() * &x, x);
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(AlgebraElement::alpha().adjoint(), AlgebraElement::alpha_star());
        assert_eq!(a(0, 1, 1).adjoint(), a(0, 1, 1));
    }

    #[test]
    fn tensor_products() {
        let alpha = AlgebraElement::alpha();
        let lhs = TensorElement::pure([&alpha, &alpha]);
        let rhs = TensorElement::pure([&AlgebraElement::one(), &AlgebraElement::alpha_star()]);
        let expected = TensorElement::pure([
            &alpha,
            &(&AlgebraElement::one() - &a(0, 1, 1).scale(&Scalar::q_pow(2))),
        ]);
        assert_eq!(&lhs * &rhs, expected);

        let lhs = TensorElement::pure([&AlgebraElement::gamma_star(), &AlgebraElement::gamma()]);
        let expected = TensorElement::pure([
            &AlgebraElement::gamma_star(),
            &AlgebraElement::term(Scalar::q(), BasisIndex::new(-1, 0, 1)),
        ]);
        assert_eq!(&lhs * &rhs, expected);
    }

    #[test]
    fn fundamental_matrix_is_unitary() {
        assert!(check_fundamental_unitary());
        let mut broken = fundamental_matrix();
        broken.set(0, 1, AlgebraElement::gamma_star().scale(&Scalar::from_int(-1)));
        assert!(!is_unitary(&broken));
    }

    #[test]
    fn identity_matrix_is_neutral() {
        let u = fundamental_matrix();
        assert_eq!(AlgMatrix::identity(2).try_mul(&u).unwrap(), u);
        assert!(AlgMatrix::identity(3).try_mul(&u).is_err());
    }

    #[test]
    fn rendering() {
        let x = normalize_word(&Scalar::one(), &[Gen::Gamma, Gen::Alpha]);
        assert_eq!(x.to_string(), "(q^-1) * a c");
        assert_eq!(a(-2, 1, 0).to_string(), "a*^2 c*");
        assert_eq!(AlgebraElement::one().to_string(), "1");
        assert_eq!(AlgebraElement::zero().to_string(), "0");
    }

    #[test]
    fn leftmost_and_rightmost_agree() {
        use Gen::*;
        let w = [Gamma, AlphaStar, Alpha, GammaStar, Alpha, AlphaStar, Gamma];
        assert_eq!(
            normalize_word_with(&Scalar::one(), &w, RedexOrder::Leftmost),
            normalize_word_with(&Scalar::one(), &w, RedexOrder::Rightmost)
        );
    }
}
