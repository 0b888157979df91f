//! Infinitesimal representations: matrix triples `(A0, A1, A2)` with
//!
//! ```text
//! q A2 A0 - q^-1 A0 A2 = A1
//! q^2 A1 A0 - q^-2 A0 A1 = (1 + q^2) A0
//! q^2 A2 A1 - q^-2 A1 A2 = (1 + q^2) A2
//! -q A0^* = A2,  A1^* = A1
//! ```
//!
//! The canonical irreducible systems involve square roots of rational
//! functions of `q`, so this module works in double precision.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::dual::ScalarMatrix;

pub type CMatrix = DMatrix<Complex64>;

/// Reading of the `c_k` formula on the step-2 weight lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Convention {
    /// `A0 x_k = -c_{k+1} x_{k+2}`, `A2 x_k = -q c_k x_{k-2}`, `k` the weight.
    Literal,
    /// The same formulas with `k` replaced by the position `(k+n)/2`.
    HalfIndex,
    /// `A0 x_k = -q^-1 c_{k+2} x_{k+2}`, `A2 x_k = c_k x_{k-2}`, `k` the weight.
    ShiftedRescaled,
}

impl Convention {
    pub const ALL: [Convention; 3] = [
        Convention::Literal,
        Convention::HalfIndex,
        Convention::ShiftedRescaled,
    ];
}

#[derive(Clone, Debug, PartialEq)]
pub struct InfSystem {
    pub q0: f64,
    pub a: [CMatrix; 3],
    /// Set for systems produced by [`inf_build`].
    pub convention: Option<Convention>,
}

impl InfSystem {
    pub fn dim(&self) -> usize {
        self.a[0].nrows()
    }

    /// Imports an exact system, evaluated at `q = q0`.
    pub fn from_exact(a: &[ScalarMatrix; 3], q0: f64) -> Self {
        let conv = |m: &ScalarMatrix| {
            CMatrix::from_fn(m.rows(), m.cols(), |i, j| {
                Complex64::new(m.get(i, j).eval_f64(q0), 0.0)
            })
        };
        InfSystem {
            q0,
            a: [conv(&a[0]), conv(&a[1]), conv(&a[2])],
            convention: None,
        }
    }
}

/// `c_k = sqrt((q^-k - q^n)(q^-n - q^(2-k))) / (q^-2 - 1)`.
pub fn c_coeff(n: u32, k: f64, q: f64) -> f64 {
    let n = n as f64;
    let radicand = (q.powf(-k) - q.powf(n)) * (q.powf(-n) - q.powf(2.0 - k));
    // rounding can push an exact zero slightly negative
    let radicand = if radicand < 0.0 && radicand > -1e-12 { 0.0 } else { radicand };
    radicand.sqrt() / (q.powi(-2) - 1.0)
}

/// `d_k = (q^-2k - 1) / (q^-2 - 1)`.
pub fn d_coeff(k: f64, q: f64) -> f64 {
    (q.powf(-2.0 * k) - 1.0) / (q.powi(-2) - 1.0)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The canonical system in a given convention. Basis position `j = 0..n`
/// carries weight `k = 2j - n`; `A0` raises and `A2` lowers the weight.
pub fn inf_build_with(n: u32, q0: f64, convention: Convention) -> InfSystem {
    let d = n as usize + 1;
    let mut a0 = CMatrix::zeros(d, d);
    let mut a1 = CMatrix::zeros(d, d);
    let mut a2 = CMatrix::zeros(d, d);
    for j in 0..d {
        let k = 2.0 * j as f64 - n as f64;
        let label = match convention {
            Convention::HalfIndex => j as f64,
            _ => k,
        };
        a1[(j, j)] = real(d_coeff(label, q0));
        let (up, down) = match convention {
            Convention::Literal | Convention::HalfIndex => (
                -c_coeff(n, label + 1.0, q0),
                -q0 * c_coeff(n, label, q0),
            ),
            Convention::ShiftedRescaled => (
                -c_coeff(n, label + 2.0, q0) / q0,
                c_coeff(n, label, q0),
            ),
        };
        if j + 1 < d {
            a0[(j + 1, j)] = real(up);
        }
        if j > 0 {
            a2[(j - 1, j)] = real(down);
        }
    }
    InfSystem {
        q0,
        a: [a0, a1, a2],
        convention: Some(convention),
    }
}

pub const DEFAULT_TOL: f64 = 1e-9;

/// The canonical irreducible system of dimension `n + 1`, in the first
/// convention that satisfies every relation.
pub fn inf_build(n: u32, q0: f64) -> InfSystem {
    Convention::ALL
        .iter()
        .map(|c| inf_build_with(n, q0, *c))
        .find(|s| inf_verify(s, DEFAULT_TOL).passes)
        .unwrap_or_else(|| inf_build_with(n, q0, Convention::Literal))
}

fn max_norm(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InfReport {
    pub convention: Option<Convention>,
    /// Max-norm residuals of the three q-commutator relations followed by
    /// the two adjoint relations.
    pub residuals: [f64; 5],
    /// Each residual divided by the largest max-norm among the terms of its
    /// relation (or by 1 if that is smaller).
    pub relative: [f64; 5],
    pub tol: f64,
    /// Whether every relative residual is within `tol`.
    pub passes: bool,
}

impl InfReport {
    pub const NAMES: [&'static str; 5] = [
        "q A2 A0 - q^-1 A0 A2 = A1",
        "q^2 A1 A0 - q^-2 A0 A1 = (1+q^2) A0",
        "q^2 A2 A1 - q^-2 A1 A2 = (1+q^2) A2",
        "-q A0^* = A2",
        "A1^* = A1",
    ];

    pub fn first_failure(&self) -> Option<&'static str> {
        self.relative
            .iter()
            .position(|r| !(*r <= self.tol))
            .map(|i| Self::NAMES[i])
    }
}

/// Absolute residuals and the scale of the terms in each relation.
pub fn inf_residuals(s: &InfSystem) -> ([f64; 5], [f64; 5]) {
    let q = s.q0;
    let [a0, a1, a2] = &s.a;
    let c = |x: f64| real(x);
    let relation = |terms: &[CMatrix]| {
        let sum = terms.iter().skip(1).fold(terms[0].clone(), |acc, t| acc + t);
        let scale = terms.iter().map(max_norm).fold(1.0, f64::max);
        (max_norm(&sum), scale)
    };
    let rels = [
        relation(&[a2 * a0 * c(q), -(a0 * a2 * c(1.0 / q)), -a1]),
        relation(&[a1 * a0 * c(q * q), -(a0 * a1 * c(1.0 / (q * q))), -(a0 * c(1.0 + q * q))]),
        relation(&[a2 * a1 * c(q * q), -(a1 * a2 * c(1.0 / (q * q))), -(a2 * c(1.0 + q * q))]),
        relation(&[a0.adjoint() * c(-q), -a2]),
        relation(&[a1.adjoint(), -a1]),
    ];
    (rels.map(|r| r.0), rels.map(|r| r.1))
}

pub fn inf_verify(s: &InfSystem, tol: f64) -> InfReport {
    let (residuals, scales) = inf_residuals(s);
    let relative = std::array::from_fn(|i| residuals[i] / scales[i]);
    InfReport {
        convention: s.convention,
        passes: relative.iter().all(|r: &f64| *r <= tol),
        residuals,
        relative,
        tol,
    }
}

/// Numerical nullspace of `m` from its singular value decomposition.
pub fn nullspace(m: &CMatrix, tol: f64) -> Vec<nalgebra::DVector<Complex64>> {
    let cols = m.ncols();
    // pad to a square system so the SVD returns a full right basis
    let mut sq = CMatrix::zeros(m.nrows().max(cols), cols);
    sq.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
    let svd = sq.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let scale = svd.singular_values.max().max(1.0);
    (0..cols)
        .filter(|&i| svd.singular_values[i] <= tol * scale)
        .map(|i| v_t.row(i).adjoint())
        .collect()
}

/// Stacked system `A_k^S X - X A_k^T = 0` in column-major `vec(X)`.
fn intertwiner_system(s: &InfSystem, t: &InfSystem) -> CMatrix {
    let (a, b) = (s.dim(), t.dim());
    let mut m = CMatrix::zeros(3 * a * b, a * b);
    for k in 0..3 {
        let ia = CMatrix::identity(a, a);
        let ib = CMatrix::identity(b, b);
        let block = ib.kronecker(&s.a[k]) - t.a[k].transpose().kronecker(&ia);
        m.view_mut((k * a * b, 0), (a * b, a * b)).copy_from(&block);
    }
    m
}

/// Dimension of `{X : A_k X = X A_k}`.
pub fn commutant_dim(s: &InfSystem, tol: f64) -> usize {
    nullspace(&intertwiner_system(s, s), tol).len()
}

/// An invertible `T` with `A_k^S T = T A_k^T` for all `k`, if one exists.
pub fn inf_equivalent(s: &InfSystem, t: &InfSystem, tol: f64) -> Option<CMatrix> {
    if s.dim() != t.dim() || (s.q0 - t.q0).abs() > f64::EPSILON {
        return None;
    }
    let d = s.dim();
    let basis = nullspace(&intertwiner_system(s, t), tol);
    if basis.is_empty() {
        return None;
    }
    // a fixed generic combination of the solution space
    let mut v = nalgebra::DVector::<Complex64>::zeros(d * d);
    for (i, b) in basis.iter().enumerate() {
        let w = Complex64::from_polar(1.0 / (1.0 + i as f64).sqrt(), 0.7 * i as f64 + 0.3);
        v += b * w;
    }
    let x = CMatrix::from_column_slice(d, d, v.as_slice());
    let x = &x / real(max_norm(&x));
    let sv = x.singular_values();
    if sv.min() <= tol * sv.max() {
        return None;
    }
    let residual = (0..3)
        .map(|k| max_norm(&(&s.a[k] * &x - &x * &t.a[k])))
        .fold(0.0, f64::max);
    (residual <= tol).then_some(x)
}

pub fn max_residual(s: &InfSystem, t: &InfSystem, x: &CMatrix) -> f64 {
    (0..3)
        .map(|k| max_norm(&(&s.a[k] * x - x * &t.a[k])))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_system() {
        let s = inf_build(0, 0.5);
        assert!(s.a.iter().all(|m| max_norm(m) == 0.0));
        assert_eq!(inf_verify(&s, 0.0).residuals, [0.0; 5]);
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(c_coeff(3, -3.0, 0.5), 0.0);
        for q in [0.3, 0.5, 0.9] {
            assert!((d_coeff(1.0, q) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn convention_search() {
        let s = inf_build(3, 0.5);
        assert!(inf_verify(&s, DEFAULT_TOL).passes);
        assert!(!inf_verify(&inf_build_with(3, 0.5, Convention::Literal), DEFAULT_TOL).passes);
    }

    #[test]
    fn perturbation_is_detected() {
        let mut s = inf_build(2, 0.5);
        s.a[1][(0, 0)] += real(1e-3);
        let r = inf_verify(&s, DEFAULT_TOL);
        assert!(r.residuals[1] >= 1e-4);
        assert!(!r.passes);
    }

    #[test]
    fn self_equivalence() {
        let s = inf_build(3, 0.5);
        let x = inf_equivalent(&s, &s, 1e-7).expect("identity intertwiner");
        let ratio = x[(0, 0)];
        assert!(((&x / ratio) - CMatrix::identity(4, 4)).iter().all(|z| z.norm() < 1e-9));
        assert!(inf_equivalent(&inf_build(1, 0.5), &inf_build(2, 0.5), 1e-7).is_none());
    }
}
