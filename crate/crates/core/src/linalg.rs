//! Exact linear algebra over a [`Field`], dense and sparse.

use crate::error::{Error, Result};
use crate::exactnum::Field;

/// Row-major dense matrix.
pub type Matrix<F> = Vec<Vec<F>>;

fn eliminate_below<F: Field>(a: &mut [Vec<F>], pivot_row: usize, col: usize, start_col: usize) {
    let inv = a[pivot_row][col].inv().expect("nonzero pivot");
    let prow: Vec<(usize, F)> = a[pivot_row]
        .iter()
        .enumerate()
        .skip(start_col)
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.mul(&inv)))
        .collect();
    for r in pivot_row + 1..a.len() {
        if a[r][col].is_zero() {
            continue;
        }
        let factor = a[r][col].clone();
        for (j, x) in &prow {
            let t = a[r][*j].sub(&factor.mul(x));
            a[r][*j] = t;
        }
    }
}

/// Rank by Gaussian elimination.
pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut a: Vec<Vec<F>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        eliminate_below(&mut a, r, c, c);
        r += 1;
    }
    r
}

pub fn is_nonsingular<F: Field>(m: &[Vec<F>]) -> bool {
    m.len() == m.first().map_or(0, Vec::len) && rank(m) == m.len()
}

/// Inverse by Gauss–Jordan elimination.
pub fn inverse<F: Field>(m: &[Vec<F>]) -> Result<Matrix<F>> {
    let n = m.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
    }
    let zero = m[0][0].zero_like();
    let one = zero.one_like();
    let mut a: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { one.clone() } else { zero.clone() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Error::Singular)?;
        a.swap(c, p);
        let inv = a[c][c].inv().unwrap();
        for x in a[c].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        let prow: Vec<(usize, F)> = a[c]
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let factor = a[r][c].clone();
            for (j, x) in &prow {
                let t = a[r][*j].sub(&factor.mul(x));
                a[r][*j] = t;
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn transpose<F: Field>(m: &[Vec<F>]) -> Matrix<F> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Matrix<F> {
    let zero = a
        .first()
        .and_then(|r| r.first())
        .or_else(|| b.first().and_then(|r| r.first()))
        .map(F::zero_like);
    let Some(zero) = zero else {
        return vec![Vec::new(); a.len()];
    };
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![zero.clone(); cols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    if !y.is_zero() {
                        out[j] = out[j].add(&x.mul(y));
                    }
                }
            }
            out
        })
        .collect()
}

/// Row vector times matrix, with the vector given sparsely.
pub fn sparse_row_times<F: Field>(v: &[(usize, F)], m: &[Vec<F>], zero: &F) -> Vec<F> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![zero.clone(); cols];
    for (k, x) in v {
        for (j, y) in m[*k].iter().enumerate() {
            if !y.is_zero() {
                out[j] = out[j].add(&x.mul(y));
            }
        }
    }
    out
}

/// Sparse row: sorted `(column, value)` pairs without zeros.
pub type SparseRow<F> = Vec<(u32, F)>;

/// `a - f·b` for sparse rows.
fn axpy<F: Field>(a: &[(u32, F)], f: &F, b: &[(u32, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, f.mul(&b[j].1).neg()));
            j += 1;
        } else {
            let v = a[i].1.sub(&f.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn lookup<F>(row: &[(u32, F)], c: u32) -> Option<&F> {
    row.binary_search_by_key(&c, |(k, _)| *k).ok().map(|i| &row[i].1)
}

/// Sparse Gauss–Jordan elimination with Markowitz pivoting.
///
/// Returns the rank and, when `with_inverse` is set and the matrix is square
/// and nonsingular, the rows of the inverse.
pub fn sparse_gauss_jordan<F: Field>(
    rows: &[SparseRow<F>],
    ncols: usize,
    one: &F,
    with_inverse: bool,
) -> (usize, Option<Vec<SparseRow<F>>>) {
    let nrows = rows.len();
    let mut left: Vec<SparseRow<F>> = rows.to_vec();
    let mut right: Vec<SparseRow<F>> = if with_inverse {
        (0..nrows).map(|i| vec![(i as u32, one.clone())]).collect()
    } else {
        vec![Vec::new(); nrows]
    };
    let mut done = vec![false; nrows];
    let mut pivots: Vec<(usize, u32)> = Vec::new();
    let mut col_count = vec![0usize; ncols];
    loop {
        col_count.iter_mut().for_each(|c| *c = 0);
        for (r, row) in left.iter().enumerate() {
            if !done[r] {
                for (c, _) in row {
                    col_count[*c as usize] += 1;
                }
            }
        }
        let mut best: Option<(usize, usize, u32)> = None;
        for (r, row) in left.iter().enumerate() {
            if done[r] || row.is_empty() {
                continue;
            }
            for (c, _) in row {
                let cost = (row.len() - 1) * (col_count[*c as usize] - 1);
                if best.map_or(true, |(b, _, _)| cost < b) {
                    best = Some((cost, r, *c));
                }
            }
        }
        let Some((_, p, c)) = best else { break };
        done[p] = true;
        pivots.push((p, c));
        let inv = lookup(&left[p], c).unwrap().inv().unwrap();
        let prow_l: SparseRow<F> = left[p].iter().map(|(k, x)| (*k, x.mul(&inv))).collect();
        let prow_r: SparseRow<F> = right[p].iter().map(|(k, x)| (*k, x.mul(&inv))).collect();
        left[p] = prow_l;
        right[p] = prow_r;
        for r in 0..nrows {
            if r == p {
                continue;
            }
            // only rows still being reduced need the pivot column removed,
            // unless the inverse is wanted
            if !with_inverse && done[r] {
                continue;
            }
            let Some(f) = lookup(&left[r], c).cloned() else { continue };
            left[r] = axpy(&left[r], &f, &left[p]);
            if with_inverse {
                right[r] = axpy(&right[r], &f, &right[p]);
            }
        }
    }
    let rank = pivots.len();
    if !with_inverse || rank != nrows || nrows != ncols {
        return (rank, None);
    }
    let mut inv = vec![Vec::new(); ncols];
    for (p, c) in pivots {
        inv[c as usize] = std::mem::take(&mut right[p]);
    }
    (rank, Some(inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{Fp61, Scalar};

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rank_and_inverse() {
        let m = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(rank(&m), 1);
        assert!(inverse(&m).is_err());
        let m = vec![vec![q(0), q(2), q(1)], vec![q(1), q(0), q(0)], vec![q(3), q(1), q(1)]];
        assert_eq!(rank(&m), 3);
        let inv = inverse(&m).unwrap();
        let id = mat_mul(&m, &inv);
        for (i, row) in id.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, q((i == j) as i64));
            }
        }
        let empty: Matrix<Scalar> = Vec::new();
        assert_eq!(rank(&empty), 0);
    }

    #[test]
    fn modular_rank() {
        let m: Vec<Vec<Fp61>> = vec![
            vec![Fp61::new(1), Fp61::new(2)],
            vec![Fp61::new(3), Fp61::new(6)],
        ];
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn sparse_elimination_matches_dense() {
        let m = vec![vec![q(0), q(2), q(1)], vec![q(1), q(0), q(0)], vec![q(3), q(1), q(1)]];
        let rows: Vec<SparseRow<Scalar>> = m
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j as u32, x.clone())).collect())
            .collect();
        let (rk, inv) = sparse_gauss_jordan(&rows, 3, &q(1), true);
        assert_eq!(rk, 3);
        let dense_inv = inverse(&m).unwrap();
        for (i, row) in inv.unwrap().iter().enumerate() {
            let mut d = vec![q(0); 3];
            for (j, x) in row {
                d[*j as usize] = x.clone();
            }
            assert_eq!(d, dense_inv[i]);
        }
        let singular = vec![vec![(0, q(1)), (1, q(2))], vec![(0, q(2)), (1, q(4))]];
        assert_eq!(sparse_gauss_jordan(&singular, 2, &q(1), true).0, 1);
    }

    #[test]
    fn sparse_product() {
        let m = vec![vec![q(1), q(2)], vec![q(3), q(4)]];
        assert_eq!(sparse_row_times(&[(1, q(2))], &m, &q(0)), vec![q(6), q(8)]);
        assert_eq!(transpose(&m)[0], vec![q(1), q(3)]);
    }
}
