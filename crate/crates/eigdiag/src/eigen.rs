//! Cyclic complex Jacobi eigensolver for Hermitian matrices.
//!
//! Two-sided unitary 2x2 rotations annihilate one off-diagonal entry at a
//! time, sweeping all (p, q) pairs in row-cyclic order until the off-diagonal
//! Frobenius norm drops below `JACOBI_OFF_THRESHOLD * ||A||_F`. Eigenvectors
//! are accumulated so each returned eigenvalue carries a residual check
//! against the original matrix.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;

/// Off-diagonal Frobenius norm threshold, relative to the input norm.
pub const JACOBI_OFF_THRESHOLD: f64 = 1e-14;

/// Maximum number of cyclic sweeps before giving up.
pub const JACOBI_SWEEP_LIMIT: usize = 100;

/// Real eigenvalues of a Hermitian matrix in ascending order, with the
/// largest eigenpair residual recorded.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    max_residual: f64,
}

impl Spectrum {
    pub(crate) fn new(mut values: Vec<f64>, max_residual: f64) -> Self {
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Self { values, max_residual }
    }

    /// Eigenvalues ascending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// 1-based accessor matching the lambda_1 <= ... <= lambda_n notation.
    pub fn value(&self, k: usize) -> f64 {
        self.values[k - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        *self.values.last().unwrap()
    }

    /// Largest ||A v - lambda v||_2 over the computed eigenpairs. For the
    /// bisection oracle, which computes no vectors, this is the certified
    /// eigenvalue interval half-width instead.
    pub fn max_residual(&self) -> f64 {
        self.max_residual
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// One Jacobi rotation annihilating entry (p, q), p < q.
///
/// Writes the rotated matrix in place, keeping it exactly Hermitian:
/// diagonal updates use real arithmetic and mirror entries are stored as
/// conjugates.
fn rotate(a: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let beta = a[p * n + q];
    let abs_beta = beta.norm();
    if abs_beta == 0.0 {
        return;
    }
    let w = beta / abs_beta;
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let tau = (aqq - app) / (2.0 * abs_beta);
    // Smaller root of t^2 + 2 tau t - 1 = 0; switch to the asymptotic form
    // when tau^2 would overflow.
    let t = if tau.abs() > 1e150 {
        0.5 / tau
    } else {
        let sign = if tau >= 0.0 { 1.0 } else { -1.0 };
        sign / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Diagonal and pivot entries.
    a[p * n + p] = Complex64::new(app - t * abs_beta, 0.0);
    a[q * n + q] = Complex64::new(aqq + t * abs_beta, 0.0);
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);

    // Remaining rows/columns, mirrored to preserve exact symmetry.
    let wc = w.conj();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * wc * akq;
        let new_kq = s * w * akp + c * akq;
        a[k * n + p] = new_kp;
        a[k * n + q] = new_kq;
        a[p * n + k] = new_kp.conj();
        a[q * n + k] = new_kq.conj();
    }

    // Accumulate eigenvectors: V <- V U.
    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * wc * vkq;
        v[k * n + q] = s * w * vkp + c * vkq;
    }
}

fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for j in 0..n {
        for k in 0..n {
            if j != k {
                sum += a[j * n + k].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Ascending eigenvalues of a Hermitian matrix.
///
/// Returns `ConvergenceFailure` if the sweep limit is exceeded (does not
/// happen for finite Hermitian input in practice; Jacobi converges
/// quadratically).
pub fn eigenvalues(matrix: &HermitianMatrix) -> Result<Spectrum> {
    let n = matrix.order();
    if n == 1 {
        return Ok(Spectrum::new(vec![matrix.get(0, 0).re], 0.0));
    }

    let mut a: Vec<Complex64> = matrix.entries().to_vec();
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        v[j * n + j] = Complex64::new(1.0, 0.0);
    }

    let norm = matrix.frobenius_norm();
    let threshold = JACOBI_OFF_THRESHOLD * norm;

    let mut converged = false;
    for _sweep in 0..JACOBI_SWEEP_LIMIT {
        if off_diagonal_norm(&a, n) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a, n) > threshold {
        return Err(Error::ConvergenceFailure {
            sweeps: JACOBI_SWEEP_LIMIT,
            off_norm: off_diagonal_norm(&a, n),
        });
    }

    // Residual of every eigenpair against the original matrix.
    let mut max_residual = 0.0f64;
    let mut values = Vec::with_capacity(n);
    for j in 0..n {
        let lambda = a[j * n + j].re;
        values.push(lambda);
        let col: Vec<Complex64> = (0..n).map(|k| v[k * n + j]).collect();
        let image = matrix.mul_vec(&col);
        let mut res_sq = 0.0;
        for k in 0..n {
            res_sq += (image[k] - lambda * col[k]).norm_sqr();
        }
        max_residual = max_residual.max(res_sq.sqrt());
    }

    Ok(Spectrum::new(values, max_residual))
}
