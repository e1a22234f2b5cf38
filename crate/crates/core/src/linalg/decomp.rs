//! Jacobi-type decompositions and a dense solver for the small systems used
//! by the fitting and kernel computations.

use alloc::vec::Vec;

use super::Mat4;
use crate::math::sqrt;

const MAX_SWEEPS: usize = 64;

/// Eigen-decomposition of a symmetric `N×N` matrix by cyclic Jacobi rotations.
///
/// Returns the eigenvalues in decreasing order and the matching eigenvectors
/// as the columns of the second result.
pub fn sym_eigen<const N: usize>(m: &[[f64; N]; N]) -> ([f64; N], [[f64; N]; N]) {
    let mut a = *m;
    let mut v = [[0.0; N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        let mut diag = 0.0;
        for i in 0..N {
            diag += a[i][i] * a[i][i];
            for j in (i + 1)..N {
                off += a[i][j] * a[i][j];
            }
        }
        if off <= f64::EPSILON * f64::EPSILON * diag.max(f64::MIN_POSITIVE) * 1e-4 || off == 0.0 {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..N {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..N {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: [usize; N] = core::array::from_fn(|i| i);
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let values = core::array::from_fn(|k| a[order[k]][order[k]]);
    let vectors = core::array::from_fn(|i| core::array::from_fn(|k| v[i][order[k]]));
    (values, vectors)
}

/// Singular values of a 4×4 matrix in decreasing order.
///
/// One-sided (Hestenes) Jacobi: columns are orthogonalized in place, so small
/// singular values keep absolute accuracy near machine epsilon times the
/// matrix norm instead of its square root.
pub fn singular_values4(m: &Mat4) -> [f64; 4] {
    let mut cols: [[f64; 4]; 4] = core::array::from_fn(|j| core::array::from_fn(|i| m.0[i][j]));
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..4 {
            for q in (p + 1)..4 {
                let alpha: f64 = cols[p].iter().map(|x| x * x).sum();
                let beta: f64 = cols[q].iter().map(|x| x * x).sum();
                let gamma: f64 = (0..4).map(|k| cols[p][k] * cols[q][k]).sum();
                if gamma.abs() <= f64::EPSILON * sqrt(alpha * beta) || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + sqrt(1.0 + zeta * zeta));
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / sqrt(1.0 + t * t);
                let s = c * t;
                for k in 0..4 {
                    let xp = cols[p][k];
                    let xq = cols[q][k];
                    cols[p][k] = c * xp - s * xq;
                    cols[q][k] = s * xp + c * xq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut s: [f64; 4] = core::array::from_fn(|j| sqrt(cols[j].iter().map(|x| x * x).sum()));
    s.sort_by(|x, y| y.total_cmp(x));
    s
}

/// Solves the dense `n×n` system `a x = b` (row-major `a`) by Gaussian
/// elimination with partial pivoting. Returns `None` for a singular matrix.
pub fn solve_dense(n: usize, a: &[f64], b: &[f64]) -> Option<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    assert_eq!(b.len(), n);
    let mut m: Vec<f64> = a.to_vec();
    let mut x: Vec<f64> = b.to_vec();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| m[i * n + col].abs().total_cmp(&m[j * n + col].abs()))?;
        if m[pivot * n + col] == 0.0 {
            return None;
        }
        if pivot != col {
            for j in 0..n {
                m.swap(col * n + j, pivot * n + j);
            }
            x.swap(col, pivot);
        }
        for row in (col + 1)..n {
            let factor = m[row * n + col] / m[col * n + col];
            if factor != 0.0 {
                for j in col..n {
                    m[row * n + j] -= factor * m[col * n + j];
                }
                x[row] -= factor * x[col];
            }
        }
    }
    for row in (0..n).rev() {
        let mut acc = x[row];
        for j in (row + 1)..n {
            acc -= m[row * n + j] * x[j];
        }
        x[row] = acc / m[row * n + row];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}
