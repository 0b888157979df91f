//! Exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::scalars::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : A x = 0}` for `A` given as rows of length `cols`.
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); cols];
            v[fc] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][fc].clone();
            }
            v
        })
        .collect()
}

pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Basis of `{T : A_k T = T B_k for all k}` for square families of sizes
/// `a` and `b`; each solution is an `a x b` matrix.
pub fn intertwiner_space(
    left: &[Matrix<Rational>],
    right: &[Matrix<Rational>],
) -> Vec<Matrix<Rational>> {
    let a = left.first().map_or(0, |m| m.rows());
    let b = right.first().map_or(0, |m| m.rows());
    let var = |i: usize, j: usize| i * b + j;
    let mut eqs = Vec::new();
    for (l, r) in left.iter().zip(right) {
        // (L T - T R)_{ij} = sum_m L_im T_mj - sum_m T_im R_mj
        for i in 0..a {
            for j in 0..b {
                let mut row = vec![Rational::zero(); a * b];
                for m in 0..a {
                    row[var(m, j)] += l.get(i, m);
                }
                for m in 0..b {
                    row[var(i, m)] -= r.get(m, j);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.push(row);
                }
            }
        }
    }
    nullspace(&eqs, a * b)
        .into_iter()
        .map(|v| Matrix::new(a, b, v).expect("shape"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn nullspace_of_rank_one() {
        let rows = vec![vec![rat(1, 1), rat(2, 1), rat(3, 1)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot = &(&v[0] + &(&v[1] * &rat(2, 1))) + &(&v[2] * &rat(3, 1));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn commutant_of_scalars_is_everything() {
        let id = Matrix::<Rational>::identity(2);
        assert_eq!(intertwiner_space(std::slice::from_ref(&id), std::slice::from_ref(&id)).len(), 4);
    }

    #[test]
    fn commutant_of_distinct_diagonal() {
        let d = Matrix::new(2, 2, vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(2, 1)]).unwrap();
        assert_eq!(intertwiner_space(std::slice::from_ref(&d), std::slice::from_ref(&d)).len(), 2);
        assert_eq!(rank(&[vec![rat(1, 1), rat(1, 1)], vec![rat(2, 1), rat(2, 1)]], 2), 1);
    }
}
