//! Finite-dimensional corepresentations.
//!
//! `U_n` acts on the span `V_n` of `a^k c*^(n-k)`, `k = 0..n`, and is read
//! off from `Delta(a^k c*^(n-k)) = sum_j a^j c*^(n-j) ⊗ u_{j,k}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{fundamental_matrix, AlgMatrix, AlgebraElement, BasisIndex, TensorElement, TermRecord};
use crate::dual::{Functional, Named, ScalarMatrix};
use crate::error::{Error, Result};
use crate::hopf::{antipode, counit, delta, delta_basis};
use crate::linalg::intertwiner_space;
use crate::matrix::Matrix;
use crate::oracle::pi_map;
use crate::scalars::{Rational, Scalar};

/// Label of a basis vector of a corepresentation space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    Monomial(BasisIndex),
    /// Vector of the `i`-th summand of a direct sum.
    Summand(usize, Box<BasisLabel>),
    Product(Box<BasisLabel>, Box<BasisLabel>),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Monomial(idx) => write!(f, "{idx}"),
            BasisLabel::Summand(i, l) => write!(f, "{i}:{l}"),
            BasisLabel::Product(a, b) => write!(f, "({a})x({b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corep {
    pub entries: AlgMatrix,
    pub basis: Vec<BasisLabel>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorepRecord {
    pub dim: usize,
    pub basis: Vec<String>,
    pub entries: Vec<Vec<Vec<TermRecord>>>,
}

impl Corep {
    pub fn new(entries: AlgMatrix, basis: Vec<BasisLabel>) -> Result<Self> {
        if !entries.is_square() || entries.rows() != basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix with {} basis labels",
                entries.rows(),
                entries.cols(),
                basis.len()
            )));
        }
        Ok(Corep { entries, basis })
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn entry(&self, j: usize, k: usize) -> &AlgebraElement {
        self.entries.get(j, k)
    }

    pub fn to_record(&self) -> CorepRecord {
        CorepRecord {
            dim: self.dim(),
            basis: self.basis.iter().map(|l| l.to_string()).collect(),
            entries: (0..self.dim())
                .map(|j| (0..self.dim()).map(|k| self.entry(j, k).to_records()).collect())
                .collect(),
        }
    }
}

impl fmt::Display for Corep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.basis.iter().map(|l| l.to_string()).collect();
        writeln!(f, "basis: [{}]", labels.join(", "))?;
        write!(f, "{}", self.entries)
    }
}

/// Basis monomial `a^k c*^(n-k)` of `V_n`.
pub fn vn_basis(n: u32, k: u32) -> BasisIndex {
    BasisIndex::new(k as i64, n - k, 0)
}

pub fn corep_build(n: u32) -> Result<Corep> {
    let dim = n as usize + 1;
    let mut entries = AlgMatrix::zeros(dim, dim);
    for k in 0..=n {
        for ([l, r], c) in delta_basis(vn_basis(n, k)).iter() {
            if l.m != 0 || l.k < 0 || l.k + l.n as i64 != n as i64 {
                return Err(Error::Internal(format!(
                    "left leg {l} of Delta({}) lies outside V_{n}",
                    vn_basis(n, k)
                )));
            }
            let e = entries.get_mut(l.k as usize, k as usize);
            e.add_term(*r, c.clone());
        }
    }
    let basis = (0..=n).map(|k| BasisLabel::Monomial(vn_basis(n, k))).collect();
    Corep::new(entries, basis)
}

/// `(id ⊗ f)` applied entrywise to an algebra matrix.
pub fn apply_entrywise(u: &AlgMatrix, f: impl Fn(&AlgebraElement) -> AlgebraElement) -> AlgMatrix {
    u.map(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorepReport {
    pub corep_eq: bool,
    pub antipode_inverse: bool,
    pub counit_unit: bool,
}

impl CorepReport {
    pub fn all(&self) -> bool {
        self.corep_eq && self.antipode_inverse && self.counit_unit
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.corep_eq {
            Some("corep_eq")
        } else if !self.antipode_inverse {
            Some("antipode_inverse")
        } else if !self.counit_unit {
            Some("counit_unit")
        } else {
            None
        }
    }
}

fn corep_equation_holds(u: &AlgMatrix) -> bool {
    let d = u.rows();
    (0..d).all(|j| {
        (0..d).all(|k| {
            let mut rhs = TensorElement::zero();
            for m in 0..d {
                rhs = &rhs + &TensorElement::pure([u.get(j, m), u.get(m, k)]);
            }
            delta(u.get(j, k)) == rhs
        })
    })
}

pub fn corep_check(u: &Corep) -> CorepReport {
    let id = AlgMatrix::identity(u.dim());
    let s = apply_entrywise(&u.entries, antipode);
    let inverse = |a: &AlgMatrix, b: &AlgMatrix| a.try_mul(b).map(|p| p == id).unwrap_or(false);
    let counit_unit = (0..u.dim()).all(|j| {
        (0..u.dim()).all(|k| {
            let e = counit(u.entry(j, k));
            if j == k {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    });
    CorepReport {
        corep_eq: corep_equation_holds(&u.entries),
        antipode_inverse: inverse(&s, &u.entries) && inverse(&u.entries, &s),
        counit_unit,
    }
}

pub fn corep_dsum(u: &Corep, v: &Corep) -> Corep {
    let basis = u
        .basis
        .iter()
        .map(|l| BasisLabel::Summand(0, Box::new(l.clone())))
        .chain(v.basis.iter().map(|l| BasisLabel::Summand(1, Box::new(l.clone()))))
        .collect();
    Corep {
        entries: u.entries.block_diag(&v.entries),
        basis,
    }
}

/// `(U ⊠ V)_{(i,k),(j,l)} = u_{i,j} v_{k,l}`.
pub fn corep_tensor(u: &Corep, v: &Corep) -> Corep {
    let basis = u
        .basis
        .iter()
        .flat_map(|a| {
            v.basis
                .iter()
                .map(move |b| BasisLabel::Product(Box::new(a.clone()), Box::new(b.clone())))
        })
        .collect();
    Corep {
        entries: u.entries.kron(&v.entries),
        basis,
    }
}

/// `(A_0, A_1, A_2)` with `A_k = (id ⊗ chi_k) U`.
pub fn amatrices(u: &Corep) -> [ScalarMatrix; 3] {
    std::array::from_fn(|k| {
        let chi = Functional::Named(Named::chi(k));
        u.entries.map(|x| chi.eval(x))
    })
}

fn q(e: i64) -> Scalar {
    Scalar::q_pow(e)
}

fn ratio(num: Scalar, den: Scalar) -> Scalar {
    num.checked_div(&den).expect("nonzero denominator in Q(u)")
}

/// Closed-form `A_0(U_n)` entry at `(k+1, k)`:
/// `-q^(n-k-2) (1 - q^(-2(n-k))) / (1 - q^-2)`.
pub fn a0_closed_form(n: u32, k: u32) -> Scalar {
    let (n, k) = (n as i64, k as i64);
    let frac = ratio(&Scalar::one() - &q(-2 * (n - k)), &Scalar::one() - &q(-2));
    -(&q(n - k - 2) * &frac)
}

/// Closed-form diagonal of `A_1(U_n)`: `q^2 (q^(2(n-2k)) - 1) / (1 - q^2)`.
pub fn a1_closed_form(n: u32, k: u32) -> Scalar {
    let (n, k) = (n as i64, k as i64);
    ratio(&q(2) * &(&q(2 * (n - 2 * k)) - &Scalar::one()), &Scalar::one() - &q(2))
}

/// Closed-form `A_2(U_n)` entry at `(k-1, k)`:
/// `q^(n-k+2) (1 - q^(-2k)) / (1 - q^-2)`, obtained from the same
/// iterated-Leibniz computation as `A_0`.
pub fn a2_closed_form(n: u32, k: u32) -> Scalar {
    let (n, k) = (n as i64, k as i64);
    let frac = ratio(&Scalar::one() - &q(-2 * k), &Scalar::one() - &q(-2));
    &q(n - k + 2) * &frac
}

/// The three closed-form shapes: `A_0` subdiagonal, `A_1` diagonal and
/// `A_2` superdiagonal, with every other entry zero.
pub fn amatrices_closed_form(n: u32) -> [ScalarMatrix; 3] {
    let d = n as usize + 1;
    let a0 = Matrix::from_fn(d, d, |i, j| {
        if i == j + 1 {
            a0_closed_form(n, j as u32)
        } else {
            Scalar::zero()
        }
    });
    let a1 = Matrix::from_fn(d, d, |i, j| {
        if i == j {
            a1_closed_form(n, j as u32)
        } else {
            Scalar::zero()
        }
    });
    let a2 = Matrix::from_fn(d, d, |i, j| {
        if i + 1 == j {
            a2_closed_form(n, j as u32)
        } else {
            Scalar::zero()
        }
    });
    [a0, a1, a2]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SystemReport {
    /// `q A2 A0 - q^-1 A0 A2 = A1`.
    pub commutator_a: bool,
    /// `q^2 A1 A0 - q^-2 A0 A1 = (1+q^2) A0`.
    pub commutator_b: bool,
    /// `q^2 A2 A1 - q^-2 A1 A2 = (1+q^2) A2`.
    pub commutator_c: bool,
    /// `-q A0^T = A2`.
    pub adjoint_a: bool,
    /// `A1^T = A1`.
    pub adjoint_b: bool,
}

impl SystemReport {
    pub fn relations(&self) -> bool {
        self.commutator_a && self.commutator_b && self.commutator_c
    }

    pub fn adjoint_relations(&self) -> bool {
        self.adjoint_a && self.adjoint_b
    }
}

/// Checks the q-commutator and adjoint relations symbolically. Scalars are
/// real, so the adjoint is the transpose.
pub fn system_check(a: &[ScalarMatrix; 3]) -> SystemReport {
    let mul = |x: &ScalarMatrix, y: &ScalarMatrix| x.try_mul(y).expect("square system");
    let comb = |c1: Scalar, x: &ScalarMatrix, c2: Scalar, y: &ScalarMatrix| {
        x.scale(&c1).try_add(&y.scale(&c2)).expect("square system")
    };
    let one_q2 = &Scalar::one() + &q(2);
    let [a0, a1, a2] = a;
    SystemReport {
        commutator_a: comb(q(1), &mul(a2, a0), -q(-1), &mul(a0, a2)) == *a1,
        commutator_b: comb(q(2), &mul(a1, a0), -q(-2), &mul(a0, a1)) == a0.scale(&one_q2),
        commutator_c: comb(q(2), &mul(a2, a1), -q(-2), &mul(a1, a2)) == a2.scale(&one_q2),
        adjoint_a: a0.transpose().scale(&-q(1)) == *a2,
        adjoint_b: a1.transpose() == *a1,
    }
}

/// Finite multiplicity map on the integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WeightFunction(BTreeMap<i64, u64>);

impl WeightFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut w = Self::new();
        for (k, m) in pairs {
            w.add(k, m);
        }
        w
    }

    /// `M_(n)`: one on `{-n, -n+2, ..., n}`.
    pub fn irreducible(n: u32) -> Self {
        let n = n as i64;
        Self::from_pairs((0..=n).map(|j| (2 * j - n, 1)))
    }

    pub fn get(&self, k: i64) -> u64 {
        self.0.get(&k).copied().unwrap_or(0)
    }

    pub fn add(&mut self, k: i64, m: u64) {
        if m > 0 {
            *self.0.entry(k).or_insert(0) += m;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.0.iter().map(|(k, m)| (*k, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn dsum(&self, other: &Self) -> Self {
        Self::from_pairs(self.iter().chain(other.iter()))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::from_pairs(
            self.iter()
                .flat_map(|(a, x)| other.iter().map(move |(b, y)| (a + b, x * y))),
        )
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(k, m)| format!("{k}:{m}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightOp {
    Dsum,
    Tensor,
}

pub fn weight_ops(m: &WeightFunction, n: &WeightFunction, op: WeightOp) -> WeightFunction {
    match op {
        WeightOp::Dsum => m.dsum(n),
        WeightOp::Tensor => m.tensor(n),
    }
}

/// Weights of a corepresentation through `pi: a -> z, c -> 0`.
///
/// `(id ⊗ pi) U = sum_k P_k z^k`; the `P_k` must form an exact spectral
/// family (idempotent, pairwise orthogonal, summing to the identity).
pub fn corep_weights(u: &Corep) -> Result<WeightFunction> {
    let d = u.dim();
    let mut family: BTreeMap<i64, ScalarMatrix> = BTreeMap::new();
    for j in 0..d {
        for k in 0..d {
            for (p, c) in pi_map(u.entry(j, k)).terms() {
                family
                    .entry(*p)
                    .or_insert_with(|| ScalarMatrix::zeros(d, d))
                    .set(j, k, c.clone());
            }
        }
    }
    let mul = |x: &ScalarMatrix, y: &ScalarMatrix| x.try_mul(y).expect("square");
    let mut sum = ScalarMatrix::zeros(d, d);
    let mut out = WeightFunction::new();
    for (k, p) in &family {
        if mul(p, p) != *p {
            return Err(Error::NotSpectral(format!("P_{k} is not idempotent")));
        }
        for (l, r) in &family {
            if l != k && !mul(p, r).is_zero() {
                return Err(Error::NotSpectral(format!("P_{k} P_{l} != 0")));
            }
        }
        sum = sum.try_add(p).expect("square");
        let trace = (0..d).fold(Scalar::zero(), |acc, i| acc + p.get(i, i));
        let mult = trace
            .as_rational()
            .filter(|t| t.is_integer() && !t.is_negative())
            .and_then(|t| t.to_integer().to_u64())
            .ok_or_else(|| Error::NotSpectral(format!("trace of P_{k} is {trace}")))?;
        out.add(*k, mult);
    }
    if sum != ScalarMatrix::identity(d) {
        return Err(Error::NotSpectral("projections do not sum to 1".into()));
    }
    Ok(out)
}

/// Multiplicities of `U_n`, keyed by `n`.
pub type Decomposition = BTreeMap<u32, u64>;

fn split_parity(m: &WeightFunction) -> [WeightFunction; 2] {
    let mut out = [WeightFunction::new(), WeightFunction::new()];
    for (k, c) in m.iter() {
        out[k.rem_euclid(2) as usize].add(k, c);
    }
    out
}

/// Greedy peel: strip `M(k*) M_(k*)` for the largest weight `k*`.
pub fn decompose_greedy(m: &WeightFunction) -> Result<Decomposition> {
    let mut rest: BTreeMap<i64, i128> = m.iter().map(|(k, c)| (k, c as i128)).collect();
    let mut out = Decomposition::new();
    while let Some((&top, &mult)) = rest.iter().next_back() {
        if top < 0 {
            return Err(Error::NotWeightFunction(format!(
                "weight {top} left over with no positive partner"
            )));
        }
        for w in WeightFunction::irreducible(top as u32).iter().map(|(k, _)| k) {
            let left = rest.get(&w).copied().unwrap_or(0) - mult;
            if left < 0 {
                return Err(Error::NotWeightFunction(format!(
                    "negative multiplicity at weight {w} while peeling U_{top}"
                )));
            }
            if left == 0 {
                rest.remove(&w);
            } else {
                rest.insert(w, left);
            }
        }
        *out.entry(top as u32).or_insert(0) += mult as u64;
    }
    Ok(out)
}

/// Reads multiplicities from `sin(t) M(t) = sum_n c_n sin((n+1)t)`.
///
/// With `D(j) = M(j-1) - M(j+1)`, the product is `sum_j D(j) e^{ijt} / 2i`,
/// so `c_n = D(n+1)` and `D` must be odd.
pub fn decompose_sin(m: &WeightFunction) -> Result<Decomposition> {
    let get = |k: i64| m.get(k) as i128;
    let d = |j: i64| get(j - 1) - get(j + 1);
    let reach = m.iter().map(|(k, _)| k.abs()).max().unwrap_or(0) + 1;
    let mut out = Decomposition::new();
    if d(0) != 0 {
        return Err(Error::NotWeightFunction("sin(t) M(t) has a constant term".into()));
    }
    for j in 1..=reach {
        if d(j) != -d(-j) {
            return Err(Error::NotWeightFunction(format!(
                "sin(t) M(t) is not odd at frequency {j}"
            )));
        }
        match d(j) {
            0 => {}
            c if c < 0 => {
                return Err(Error::NotWeightFunction(format!(
                    "negative multiplicity {c} for U_{}",
                    j - 1
                )))
            }
            c => {
                out.insert((j - 1) as u32, c as u64);
            }
        }
    }
    Ok(out)
}

/// Decomposes a weight function into multiplicities of the `U_n`.
///
/// Even and odd weights are handled independently; both methods must agree.
pub fn weight_decompose(m: &WeightFunction) -> Result<Decomposition> {
    let mut out = Decomposition::new();
    for class in split_parity(m) {
        let greedy = decompose_greedy(&class)?;
        let sin = decompose_sin(&class)?;
        if greedy != sin {
            return Err(Error::Internal(format!(
                "greedy {greedy:?} and sin-basis {sin:?} decompositions differ"
            )));
        }
        out.extend(greedy);
    }
    Ok(out)
}

/// Evaluates the A-matrices at `q = q0`.
pub fn amatrices_at(u: &Corep, q0: &Rational) -> Result<[Matrix<Rational>; 3]> {
    let [a0, a1, a2] = amatrices(u);
    let ev = |m: &ScalarMatrix| m.try_map(|c| c.eval(q0).map_err(Error::from));
    Ok([ev(&a0)?, ev(&a1)?, ev(&a2)?])
}

/// Basis of `{T : A_k(U) T = T A_k(V), k = 0,1,2}` at `q = q0`.
pub fn intertwiners(u: &Corep, v: &Corep, q0: &Rational) -> Result<Vec<Matrix<Rational>>> {
    Ok(intertwiner_space(&amatrices_at(u, q0)?, &amatrices_at(v, q0)?))
}

pub fn irreducible(u: &Corep, q0: &Rational) -> Result<bool> {
    Ok(intertwiners(u, u, q0)?.len() == 1)
}

/// `U_1` as displayed, in the basis `(a, c*)`.
pub fn u1_displayed() -> AlgMatrix {
    Matrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 0) => AlgebraElement::alpha(),
        (0, 1) => AlgebraElement::gamma_star(),
        (1, 0) => AlgebraElement::gamma().scale(&-q(1)),
        _ => AlgebraElement::alpha_star(),
    })
}

/// Simultaneous reversal of rows and columns.
pub fn reverse_basis(u: &AlgMatrix) -> AlgMatrix {
    let (r, c) = (u.rows(), u.cols());
    Matrix::from_fn(r, c, |i, j| u.get(r - 1 - i, c - 1 - j).clone())
}

fn scalar_diag(d: [Scalar; 2]) -> AlgMatrix {
    Matrix::from_fn(2, 2, |i, j| {
        if i == j {
            AlgebraElement::scalar(d[i].clone())
        } else {
            AlgebraElement::zero()
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnitarizationReport {
    /// The built `U_1` equals the displayed one after reversing the basis.
    pub displayed_is_built: bool,
    /// `diag(q^-1/2, -q^1/2) F diag(q^1/2, -q^-1/2)` is the displayed `U_1`.
    pub factorization: bool,
    /// Undoing the conjugation on the displayed `U_1` gives `F` entrywise.
    pub conjugates_to_fundamental: bool,
    pub fundamental_unitary: bool,
    pub displayed_unitary: bool,
}

impl UnitarizationReport {
    pub fn passes(&self) -> bool {
        self.displayed_is_built
            && self.factorization
            && self.conjugates_to_fundamental
            && self.fundamental_unitary
            && !self.displayed_unitary
    }
}

pub fn u1_unitarization() -> Result<UnitarizationReport> {
    let half = |e: i64| Scalar::u_pow(e);
    let d1 = scalar_diag([half(-1), -half(1)]);
    let d2 = scalar_diag([half(1), -half(-1)]);
    let d1_inv = scalar_diag([half(1), -half(-1)]);
    let d2_inv = scalar_diag([half(-1), -half(1)]);
    let f = fundamental_matrix();
    let shown = u1_displayed();
    let built = corep_build(1)?;
    Ok(UnitarizationReport {
        displayed_is_built: reverse_basis(&built.entries) == shown,
        factorization: d1.try_mul(&f)?.try_mul(&d2)? == shown,
        conjugates_to_fundamental: d1_inv.try_mul(&shown)?.try_mul(&d2_inv)? == f,
        fundamental_unitary: crate::algebra::is_unitary(&f),
        displayed_unitary: crate::algebra::is_unitary(&shown),
    })
}
