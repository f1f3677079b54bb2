//! Small fixed-dimension numerical helpers: spans in R^6, symmetric
//! eigendecomposition by Jacobi rotations, one-sided Jacobi SVD for rank
//! decisions. Everything here is at most 8x6, so simplicity beats libraries.

use alloc::vec::Vec;
use num_traits::Float;

pub(crate) fn dot6(a: &[f64; 6], b: &[f64; 6]) -> f64 {
    let mut s = 0.0;
    for k in 0..6 {
        s += a[k] * b[k];
    }
    s
}

pub(crate) fn norm6(a: &[f64; 6]) -> f64 {
    dot6(a, a).sqrt()
}

pub(crate) fn axpy6(y: &mut [f64; 6], alpha: f64, x: &[f64; 6]) {
    for k in 0..6 {
        y[k] += alpha * x[k];
    }
}

pub(crate) fn scale6(a: &[f64; 6], s: f64) -> [f64; 6] {
    let mut out = *a;
    for x in out.iter_mut() {
        *x *= s;
    }
    out
}

pub(crate) fn mat6_apply(m: &[[f64; 6]; 6], v: &[f64; 6]) -> [f64; 6] {
    let mut out = [0.0; 6];
    for r in 0..6 {
        out[r] = dot6(&m[r], v);
    }
    out
}

/// Orthonormal basis of the span of `rows`, with singular values below
/// `tol_rank * sigma_max` treated as zero.
///
/// One-sided Jacobi on the columns of the transposed stack: rotations make
/// the stored vectors mutually orthogonal, their norms converge to the
/// singular values.
pub(crate) fn span_basis(rows: &[[f64; 6]], tol_rank: f64) -> Vec<[f64; 6]> {
    let n = rows.len();
    if n == 0 {
        return Vec::new();
    }
    let mut v: Vec<[f64; 6]> = rows.to_vec();
    // sweeps of pairwise orthogonalization
    for _ in 0..30 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                let (vi, vj) = (v[i], v[j]);
                let aii = dot6(&vi, &vi);
                let ajj = dot6(&vj, &vj);
                let aij = dot6(&vi, &vj);
                if aij.abs() <= 1e-300 {
                    continue;
                }
                off = off.max(aij.abs() / (aii * ajj).sqrt().max(1e-300));
                // Jacobi rotation zeroing the (i,j) Gram entry
                let tau = (ajj - aii) / (2.0 * aij);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..6 {
                    let (x, y) = (vi[k], vj[k]);
                    v[i][k] = c * x - s * y;
                    v[j][k] = s * x + c * y;
                }
            }
        }
        if off < 1e-14 {
            break;
        }
    }
    let sigma_max = v.iter().map(|x| norm6(x)).fold(0.0f64, f64::max);
    if sigma_max <= 0.0 {
        return Vec::new();
    }
    let mut out: Vec<[f64; 6]> = v
        .into_iter()
        .filter(|x| norm6(x) > tol_rank * sigma_max)
        .map(|x| scale6(&x, 1.0 / norm6(&x)))
        .collect();
    // deterministic ordering: descending by dominant coordinate pattern is
    // overkill; keep insertion order but re-orthogonalize once for hygiene
    for i in 0..out.len() {
        let mut w = out[i];
        for j in 0..i {
            let p = dot6(&w, &out[j]);
            axpy6(&mut w, -p, &out[j]);
        }
        out[i] = scale6(&w, 1.0 / norm6(&w).max(1e-300));
    }
    out
}

/// Component of `v` orthogonal to the orthonormal set `basis`.
pub(crate) fn residual_against(v: &[f64; 6], basis: &[[f64; 6]]) -> [f64; 6] {
    let mut w = *v;
    for b in basis {
        let p = dot6(&w, b);
        axpy6(&mut w, -p, b);
    }
    // second pass restores orthogonality lost to cancellation
    let mut w2 = w;
    for b in basis {
        let p = dot6(&w2, b);
        axpy6(&mut w2, -p, b);
    }
    w2
}

/// Eigendecomposition of a small symmetric matrix by cyclic Jacobi.
/// Returns `(eigenvalues, eigenvectors)` with `eigenvectors[k]` the unit
/// eigenvector for `eigenvalues[k]`.
pub(crate) fn jacobi_symmetric<const N: usize>(a: [[f64; N]; N]) -> ([f64; N], [[f64; N]; N]) {
    let mut m = a;
    let mut q = [[0.0; N]; N];
    for (k, row) in q.iter_mut().enumerate() {
        row[k] = 1.0;
    }
    for _ in 0..60 {
        let mut off = 0.0f64;
        for p in 0..N {
            for r in (p + 1)..N {
                off += m[p][r] * m[p][r];
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..N {
            for r in (p + 1)..N {
                if m[p][r].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[r][r] - m[p][p]) / (2.0 * m[p][r]);
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..N {
                    let (x, y) = (m[p][k], m[r][k]);
                    m[p][k] = c * x - s * y;
                    m[r][k] = s * x + c * y;
                }
                for k in 0..N {
                    let (x, y) = (m[k][p], m[k][r]);
                    m[k][p] = c * x - s * y;
                    m[k][r] = s * x + c * y;
                }
                for k in 0..N {
                    let (x, y) = (q[p][k], q[r][k]);
                    q[p][k] = c * x - s * y;
                    q[r][k] = s * x + c * y;
                }
            }
        }
    }
    let mut vals = [0.0; N];
    for k in 0..N {
        vals[k] = m[k][k];
    }
    (vals, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn span_rank_counts() {
        let e1 = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        let e2 = [0.0, 1.0, 0.0, 0.0, 0.0, 0.0];
        let sum = [1.0, 1.0, 0.0, 0.0, 0.0, 0.0];
        let basis = span_basis(&[e1, e2, sum], 1e-8);
        assert_eq!(basis.len(), 2);
        let basis = span_basis(&[e1, scale6(&e1, -3.0)], 1e-8);
        assert_eq!(basis.len(), 1);
        assert!(span_basis(&[], 1e-8).is_empty());
    }

    #[test]
    fn jacobi_diagonalizes() {
        let a = [[2.0, 1.0, 0.0], [1.0, 3.0, 0.5], [0.0, 0.5, 1.0]];
        let (vals, vecs) = jacobi_symmetric(a);
        for k in 0..3 {
            // A v = lambda v
            for r in 0..3 {
                let av: f64 = (0..3).map(|c| a[r][c] * vecs[k][c]).sum();
                assert!((av - vals[k] * vecs[k][r]).abs() < 1e-10);
            }
        }
        let trace: f64 = vals.iter().sum();
        assert!((trace - 6.0).abs() < 1e-10);
    }

    #[test]
    fn residual_projects_out() {
        let e1 = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        let v = [0.3, 0.4, 0.0, 0.0, 0.0, 0.5];
        let r = residual_against(&v, &vec![e1]);
        assert!(r[0].abs() < 1e-15);
        assert!((r[1] - 0.4).abs() < 1e-15);
    }
}
