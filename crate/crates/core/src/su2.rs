//! Integer irreducible representations of the classical sl(2) triple.
//!
//! Brackets follow `[h,e] = 2e`, `[f,h] = 2f`, `[f,e] = h` on the basis
//! `w_0..w_n` with
//!
//! ```text
//! e w_k = -(n-k+1) w_{k-1}     f w_k = (k+1) w_{k+1}     h w_k = (n-2k) w_k
//! ```

use serde::Serialize;

use crate::linalg::intertwiner_space;
use crate::matrix::Matrix;
use crate::scalars::Rational;

pub type IntMatrix = Matrix<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SL2Rep {
    pub n: u32,
    pub e: IntMatrix,
    pub f: IntMatrix,
    pub h: IntMatrix,
}

pub fn sl2_build(n: u32) -> SL2Rep {
    let d = n as usize + 1;
    let ni = n as i64;
    SL2Rep {
        n,
        e: Matrix::from_fn(d, d, |i, j| {
            let k = j as i64;
            if i + 1 == j {
                -(ni - k + 1)
            } else {
                0
            }
        }),
        f: Matrix::from_fn(d, d, |i, j| if i == j + 1 { j as i64 + 1 } else { 0 }),
        h: Matrix::from_fn(d, d, |i, j| if i == j { ni - 2 * j as i64 } else { 0 }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SL2Report {
    pub n: u32,
    pub bracket_he: bool,
    pub bracket_fh: bool,
    pub bracket_fe: bool,
    pub trace_zero: bool,
    /// `(fe) w_k = -(n-k+1) k w_k`.
    pub fe_eigenvalues: bool,
    /// `(ef) w_k = -(n-k)(k+1) w_k`.
    pub ef_eigenvalues: bool,
    /// `h` has weights `n, n-2, ..., -n`, each once.
    pub weight_string: bool,
    pub commutant_dim: usize,
}

impl SL2Report {
    pub fn passes(&self) -> bool {
        self.bracket_he
            && self.bracket_fh
            && self.bracket_fe
            && self.trace_zero
            && self.fe_eigenvalues
            && self.ef_eigenvalues
            && self.weight_string
            && self.commutant_dim == 1
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.bracket_he, "[h,e] = 2e"),
            (self.bracket_fh, "[f,h] = 2f"),
            (self.bracket_fe, "[f,e] = h"),
            (self.trace_zero, "trace h = 0"),
            (self.fe_eigenvalues, "fe eigenvalues"),
            (self.ef_eigenvalues, "ef eigenvalues"),
            (self.weight_string, "weight string"),
            (self.commutant_dim == 1, "commutant is scalar"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.try_mul(b).expect("square")
}

fn bracket(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    mul(a, b).try_add(&mul(b, a).scale(&-1)).expect("square")
}

fn is_diagonal_with(m: &IntMatrix, diag: impl Fn(i64) -> i64) -> bool {
    (0..m.rows()).all(|i| {
        (0..m.cols()).all(|j| *m.get(i, j) == if i == j { diag(i as i64) } else { 0 })
    })
}

pub fn sl2_verify(rep: &SL2Rep) -> SL2Report {
    let (e, f, h) = (&rep.e, &rep.f, &rep.h);
    let n = rep.n as i64;
    let mut weights: Vec<i64> = (0..h.rows()).map(|i| *h.get(i, i)).collect();
    weights.sort_unstable_by(|a, b| b.cmp(a));
    let to_q = |m: &IntMatrix| m.map(|x| Rational::from_integer((*x).into()));
    let family = [to_q(e), to_q(f), to_q(h)];
    SL2Report {
        n: rep.n,
        bracket_he: bracket(h, e) == e.scale(&2),
        bracket_fh: bracket(f, h) == f.scale(&2),
        bracket_fe: bracket(f, e) == *h,
        trace_zero: (0..h.rows()).map(|i| h.get(i, i)).sum::<i64>() == 0,
        fe_eigenvalues: is_diagonal_with(&mul(f, e), |k| -(n - k + 1) * k),
        ef_eigenvalues: is_diagonal_with(&mul(e, f), |k| -(n - k) * (k + 1)),
        weight_string: weights == (0..=n).map(|j| n - 2 * j).collect::<Vec<_>>(),
        commutant_dim: intertwiner_space(&family, &family).len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_rep() {
        let r = sl2_build(0);
        assert!(r.e.is_zero() && r.f.is_zero() && r.h.is_zero());
        assert!(sl2_verify(&r).passes());
    }

    #[test]
    fn two_dimensional() {
        let r = sl2_build(1);
        assert_eq!(r.h, Matrix::new(2, 2, vec![1, 0, 0, -1]).unwrap());
        assert_eq!(*r.f.get(1, 0), 1);
        assert_eq!(*r.e.get(0, 1), -1);
    }

    #[test]
    fn ladder_endpoints() {
        let r = sl2_build(3);
        let fe = mul(&r.f, &r.e);
        let ef = mul(&r.e, &r.f);
        assert_eq!(*fe.get(0, 0), 0);
        assert_eq!(*ef.get(0, 0), -3);
        assert!(sl2_verify(&r).passes());
    }

    #[test]
    fn wrong_diagonal_fails() {
        let mut r = sl2_build(3);
        for k in 0..4 {
            r.h.set(k, k, 3 - k as i64);
        }
        let report = sl2_verify(&r);
        assert!(!report.bracket_fe);
        assert!(!report.passes());
    }
}
