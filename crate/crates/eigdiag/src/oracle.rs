//! Independent eigenvalue oracle: Householder tridiagonalization plus
//! Sturm-sequence bisection.
//!
//! A complex Hermitian n-by-n matrix is embedded as the real symmetric
//! 2n-by-2n matrix `[[Re A, -Im A], [Im A, Re A]]`, whose spectrum is that of
//! A with every eigenvalue doubled. The embedding keeps the whole pipeline in
//! real arithmetic and structurally independent of the Jacobi solver, so the
//! two can cross-check each other.

use crate::error::{Error, Result};
use crate::eigen::Spectrum;
use crate::matrix::HermitianMatrix;

/// Largest order accepted by [`oracle_eigenvalues`].
pub const ORACLE_MAX_ORDER: usize = 64;

/// Absolute bisection interval width.
pub const BISECTION_WIDTH: f64 = 1e-13;

/// Ascending eigenvalues by a method independent of the Jacobi solver.
///
/// Only orders up to [`ORACLE_MAX_ORDER`] are supported; the oracle is a
/// verification tool, not a production path.
pub fn oracle_eigenvalues(matrix: &HermitianMatrix) -> Result<Spectrum> {
    let n = matrix.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: ORACLE_MAX_ORDER });
    }

    let m = 2 * n;
    let mut t = vec![0.0f64; m * m];
    for j in 0..n {
        for k in 0..n {
            let z = matrix.get(j, k);
            t[j * m + k] = z.re;
            t[j * m + (k + n)] = -z.im;
            t[(j + n) * m + k] = z.im;
            t[(j + n) * m + (k + n)] = z.re;
        }
    }

    let (diag, off) = tridiagonalize(&mut t, m);

    // Eigenvalues of the embedding come in coincident pairs; the 1st, 3rd,
    // 5th, ... smallest are exactly the spectrum of A.
    let mut values = Vec::with_capacity(n);
    for j in 0..n {
        values.push(kth_eigenvalue(&diag, &off, 2 * j + 1));
    }
    Ok(Spectrum::new(values, 0.5 * BISECTION_WIDTH))
}

/// Householder reduction of a real symmetric matrix (row-major, order m) to
/// tridiagonal form. Returns (diagonal, subdiagonal).
fn tridiagonalize(a: &mut [f64], m: usize) -> (Vec<f64>, Vec<f64>) {
    for k in 0..m.saturating_sub(2) {
        // Householder vector for column k below the diagonal.
        let len = m - k - 1;
        let mut x = vec![0.0; len];
        for i in 0..len {
            x[i] = a[(k + 1 + i) * m + k];
        }
        let norm_x = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let alpha = if x[0] > 0.0 { -norm_x } else { norm_x };
        let mut v = x.clone();
        v[0] -= alpha;
        let vtv: f64 = v.iter().map(|w| w * w).sum();
        if vtv == 0.0 {
            continue;
        }
        let beta = 2.0 / vtv;

        // p = beta * B v over the trailing block B = a[k+1.., k+1..].
        let mut p = vec![0.0; len];
        for i in 0..len {
            let mut acc = 0.0;
            for j in 0..len {
                acc += a[(k + 1 + i) * m + (k + 1 + j)] * v[j];
            }
            p[i] = beta * acc;
        }
        let vtp: f64 = v.iter().zip(p.iter()).map(|(a, b)| a * b).sum();
        let kappa = 0.5 * beta * vtp;
        let q: Vec<f64> = p.iter().zip(v.iter()).map(|(pi, vi)| pi - kappa * vi).collect();

        // B <- B - v q^T - q v^T
        for i in 0..len {
            for j in 0..len {
                a[(k + 1 + i) * m + (k + 1 + j)] -= v[i] * q[j] + q[i] * v[j];
            }
        }
        a[(k + 1) * m + k] = alpha;
        a[k * m + (k + 1)] = alpha;
        for i in (k + 2)..m {
            a[i * m + k] = 0.0;
            a[k * m + i] = 0.0;
        }
    }

    let diag: Vec<f64> = (0..m).map(|i| a[i * m + i]).collect();
    let off: Vec<f64> = (0..m.saturating_sub(1)).map(|i| a[(i + 1) * m + i]).collect();
    (diag, off)
}

/// Number of eigenvalues of the tridiagonal matrix strictly below `x`,
/// counted as negative pivots of the LDL^T factorization of (T - xI).
fn count_below(diag: &[f64], off: &[f64], x: f64) -> usize {
    const PIVOT_GUARD: f64 = 1e-300;
    let mut count = 0;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..diag.len() {
        let q_safe = if q.abs() < PIVOT_GUARD {
            if q < 0.0 {
                -PIVOT_GUARD
            } else {
                PIVOT_GUARD
            }
        } else {
            q
        };
        q = (diag[i] - x) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// k-th smallest eigenvalue (1-based) via bisection on the Sturm count.
fn kth_eigenvalue(diag: &[f64], off: &[f64], k: usize) -> f64 {
    let m = diag.len();
    // Gershgorin interval, slightly widened so the count brackets hold.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..m {
        let radius = if i > 0 { off[i - 1].abs() } else { 0.0 }
            + if i + 1 < m { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - radius);
        hi = hi.max(diag[i] + radius);
    }
    let pad = 1.0 + 1e-12 * lo.abs().max(hi.abs());
    lo -= pad;
    hi += pad;

    for _ in 0..200 {
        if hi - lo <= BISECTION_WIDTH {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(diag, off, mid) >= k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn diagonal_two_by_two() {
        let m = HermitianMatrix::from_diagonal(&[-1.0, 5.0]);
        let s = oracle_eigenvalues(&m).unwrap();
        assert!((s.value(1) + 1.0).abs() <= 1e-12);
        assert!((s.value(2) - 5.0).abs() <= 1e-12);
    }

    #[test]
    fn imaginary_offdiagonal_pair() {
        let raw = vec![
            vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 2.0)],
            vec![Complex64::new(0.0, -2.0), Complex64::new(0.0, 0.0)],
        ];
        let m = HermitianMatrix::new(&raw).unwrap();
        let s = oracle_eigenvalues(&m).unwrap();
        assert!((s.value(1) + 2.0).abs() <= 1e-12);
        assert!((s.value(2) - 2.0).abs() <= 1e-12);
    }

    #[test]
    fn order_cap_is_enforced() {
        let m = HermitianMatrix::zeros(65);
        assert_eq!(
            oracle_eigenvalues(&m),
            Err(Error::OrderTooLarge { n: 65, max: 64 })
        );
    }

    #[test]
    fn repeated_eigenvalues_are_resolved() {
        // 3x3 all-ones minus identity: spectrum (-1, -1, 2).
        let mut rows = vec![vec![1.0; 3]; 3];
        for j in 0..3 {
            rows[j][j] = 0.0;
        }
        let m = HermitianMatrix::from_real(&rows).unwrap();
        let s = oracle_eigenvalues(&m).unwrap();
        assert!((s.value(1) + 1.0).abs() <= 1e-12);
        assert!((s.value(2) + 1.0).abs() <= 1e-12);
        assert!((s.value(3) - 2.0).abs() <= 1e-12);
    }

    #[test]
    fn zero_matrix_spectrum() {
        let m = HermitianMatrix::zeros(4);
        let s = oracle_eigenvalues(&m).unwrap();
        for &v in s.values() {
            assert!(v.abs() <= 1e-12);
        }
    }
}
