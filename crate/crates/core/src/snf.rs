//! Smith normal form over the integers.
//!
//! The pivot is always the entry of smallest absolute value in the active
//! submatrix (ties go to the lowest row, then lowest column). Each round
//! sweeps the pivot row first and the pivot column second; a non-divisible
//! entry left in the trailing block is folded back into the pivot row. The
//! whole procedure is deterministic, which the golden CLI outputs rely on.

use crate::matrix::Matrix;
use crate::scalar::Int;

/// Result of [`smith_normal_form`]: `u * a * v == d`.
///
/// The inverses of both transforms are tracked alongside them, so changes of
/// coordinates in either direction never need a separate inversion.
#[derive(Clone, Debug)]
pub struct Snf<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
    /// Number of non-zero diagonal entries; they occupy positions `0..rank`.
    pub rank: usize,
}

impl<T: Int> Snf<T> {
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Solves `a * z = b` over the integers. Free coordinates are set to zero.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        let (m, p) = self.d.shape();
        assert_eq!(b.len(), m, "right-hand side has the wrong length");
        let c = self.u.mul_vec(b);
        let mut w = vec![T::zero(); p];
        for i in 0..m {
            if i < self.rank {
                let (q, r) = c[i].div_rem(&self.d[(i, i)]);
                if !r.is_zero() {
                    return None;
                }
                w[i] = q;
            } else if !c[i].is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&w))
    }

    /// Basis of the integer kernel `{z : a z = 0}`, as columns.
    pub fn kernel_basis(&self) -> Matrix<T> {
        let cols: Vec<usize> = (self.rank..self.v.cols()).collect();
        self.v.select_columns(&cols)
    }
}

pub fn smith_normal_form<T: Int>(a: &Matrix<T>) -> Snf<T> {
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut u_inv = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut v_inv = Matrix::identity(n);

    // Row operations act on `u` from the left and on `u_inv` from the right;
    // column operations act on `v` from the right and on `v_inv` from the left.
    let swap_rows = |d: &mut Matrix<T>, u: &mut Matrix<T>, u_inv: &mut Matrix<T>, a: usize, b: usize| {
        d.swap_rows(a, b);
        u.swap_rows(a, b);
        u_inv.swap_cols(a, b);
    };
    let swap_cols = |d: &mut Matrix<T>, v: &mut Matrix<T>, v_inv: &mut Matrix<T>, a: usize, b: usize| {
        d.swap_cols(a, b);
        v.swap_cols(a, b);
        v_inv.swap_rows(a, b);
    };
    // row[dst] += c * row[src]
    let row_op = |d: &mut Matrix<T>, u: &mut Matrix<T>, u_inv: &mut Matrix<T>, dst: usize, src: usize, c: &T| {
        d.add_row_multiple(dst, src, c);
        u.add_row_multiple(dst, src, c);
        u_inv.add_col_multiple(src, dst, &-c.clone());
    };
    // col[dst] += c * col[src]
    let col_op = |d: &mut Matrix<T>, v: &mut Matrix<T>, v_inv: &mut Matrix<T>, dst: usize, src: usize, c: &T| {
        d.add_col_multiple(dst, src, c);
        v.add_col_multiple(dst, src, c);
        v_inv.add_row_multiple(src, dst, &-c.clone());
    };

    let mut rank = 0;
    let mut t = 0;
    'outer: while t < m.min(n) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&d, t) else {
                break 'outer;
            };
            swap_rows(&mut d, &mut u, &mut u_inv, t, pi);
            swap_cols(&mut d, &mut v, &mut v_inv, t, pj);
            let pivot = d[(t, t)].clone();

            let mut remainder = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&pivot);
                row_op(&mut d, &mut u, &mut u_inv, i, t, &-q);
                remainder |= !d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&pivot);
                col_op(&mut d, &mut v, &mut v_inv, j, t, &-q);
                remainder |= !d[(t, j)].is_zero();
            }
            if remainder {
                continue;
            }

            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => row_op(&mut d, &mut u, &mut u_inv, t, i, &T::one()),
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        rank += 1;
        t += 1;
    }

    Snf { u, u_inv, d, v, v_inv, rank }
}

fn smallest_nonzero<T: Int>(d: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
