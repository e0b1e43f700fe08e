//! Naive integer linear algebra used as an oracle for the Smith form.

use num_integer::Integer;
use picard2::{BigInt, IntMatrix};
use rand::Rng as _;

use crate::Rng;

pub fn random_entries(rng: &mut Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

pub fn to_matrix(rows: usize, cols: usize, entries: &[Vec<i64>]) -> IntMatrix {
    let data = entries.iter().flatten().map(|&x| BigInt::from(x)).collect();
    IntMatrix::from_vec(rows, cols, data).expect("consistent shape")
}

/// Diagonal of any diagonalisation by elementary operations, normalised to a
/// divisibility chain with non-negative entries and zeros last.
///
/// Pivots are the first non-zero entry in reading order and rows and columns
/// are cleared by Euclid steps, so the operation sequence differs from the
/// library's smallest-pivot sweep.
pub fn elementary_diagonal(entries: &[Vec<i64>], cols: usize) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = entries.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let m = a.len();
    let n = cols;
    let k = m.min(n);
    for t in 0..k {
        let Some((pi, pj)) = (t..m).flat_map(|i| (t..n).map(move |j| (i, j))).find(|&(i, j)| a[i][j] != 0) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                while a[i][t] != 0 {
                    let q = a[i][t] / a[t][t];
                    for j in t..n {
                        a[i][j] -= q * a[t][j];
                    }
                    if a[i][t] != 0 {
                        a.swap(t, i);
                    }
                }
            }
            for j in t + 1..n {
                while a[t][j] != 0 {
                    let q = a[t][j] / a[t][t];
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            for i in t + 1..m {
                dirty |= a[i][t] != 0;
            }
            if !dirty {
                break;
            }
        }
    }
    let mut diag: Vec<i128> = (0..k).map(|i| a[i][i].abs()).collect();
    for i in 0..k {
        for j in i + 1..k {
            let (x, y) = (diag[i], diag[j]);
            diag[i] = x.gcd(&y);
            diag[j] = if x == 0 || y == 0 { 0 } else { x.lcm(&y) };
        }
    }
    diag
}

/// Invariant factors from determinantal divisors: `s_k = d_k / d_{k-1}`,
/// where `d_k` is the gcd of all `k x k` minors.
pub fn determinantal_diagonal(entries: &[Vec<i64>], cols: usize) -> Vec<i128> {
    let m = entries.len();
    let k = m.min(cols);
    let a: Vec<Vec<i128>> = entries.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut divisors = vec![1i128];
    for size in 1..=k {
        let mut g = 0i128;
        for rows in subsets(m, size) {
            for cs in subsets(cols, size) {
                let minor: Vec<Vec<i128>> = rows.iter().map(|&i| cs.iter().map(|&j| a[i][j]).collect()).collect();
                g = g.gcd(&det_i128(&minor));
            }
        }
        divisors.push(g);
    }
    (1..=k).map(|i| if divisors[i] == 0 { 0 } else { divisors[i] / divisors[i - 1] }).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn det_i128(a: &[Vec<i128>]) -> i128 {
    match a.len() {
        0 => 1,
        1 => a[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[0][j] * det_i128(&minor)
            })
            .sum(),
    }
}

/// Cofactor expansion along the first row.
pub fn determinant(a: &IntMatrix) -> BigInt {
    let n = a.rows();
    assert_eq!(n, a.cols(), "determinant of a non-square matrix");
    let rows: Vec<Vec<BigInt>> = a.row_vecs();
    det_big(&rows)
}

fn det_big(a: &[Vec<BigInt>]) -> BigInt {
    match a.len() {
        0 => BigInt::from(1),
        1 => a[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &a[0][j] * det_big(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles_agree_on_small_cases() {
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(elementary_diagonal(&a, 3), vec![2, 6, 12]);
        assert_eq!(determinantal_diagonal(&a, 3), vec![2, 6, 12]);
        let b = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(elementary_diagonal(&b, 2), vec![1, 6]);
        assert_eq!(determinantal_diagonal(&b, 2), vec![1, 6]);
        let z = vec![vec![0, 0, 0]];
        assert_eq!(elementary_diagonal(&z, 3), vec![0]);
        assert_eq!(determinantal_diagonal(&z, 3), vec![0]);
    }

    #[test]
    fn determinant_by_cofactors() {
        let m = to_matrix(3, 3, &[vec![1, 2, 3], vec![0, 1, 4], vec![5, 6, 0]]);
        assert_eq!(determinant(&m), BigInt::from(1));
    }
}
