//! Dense complex Hermitian matrices with exact conjugate symmetry.
//!
//! Construction symmetrizes the raw input (`(raw + raw*)/2` entrywise) once a
//! small asymmetry tolerance is met, so every stored matrix satisfies
//! `a[j][k] == conj(a[k][j])` bitwise and has exactly real diagonal entries.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative asymmetry admitted by [`HermitianMatrix::new`] before the input
/// is rejected as non-Hermitian.
pub const HERMITIZE_TOLERANCE: f64 = 1e-12;

/// Dense n-by-n complex Hermitian matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Builds a Hermitian matrix from raw rows.
    ///
    /// The input must be square, finite, and Hermitian up to
    /// `HERMITIZE_TOLERANCE * max(1, maxabs)`. The stored matrix is the
    /// Hermitian average `(raw + raw*)/2`, with diagonal imaginary parts
    /// forced to exact zero.
    pub fn new(raw: &[Vec<Complex64>]) -> Result<Self> {
        let n = raw.len();
        if n == 0 {
            return Err(Error::NotSquare { rows: 0, cols: 0 });
        }
        for row in raw {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
        }
        let mut max_abs = 0.0f64;
        for (j, row) in raw.iter().enumerate() {
            for (k, z) in row.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFiniteEntry { row: j, col: k });
                }
                max_abs = max_abs.max(z.norm());
            }
        }
        let tolerance = HERMITIZE_TOLERANCE * max_abs.max(1.0);
        let mut max_asymmetry = 0.0f64;
        for j in 0..n {
            for k in j..n {
                let delta = (raw[j][k] - raw[k][j].conj()).norm();
                max_asymmetry = max_asymmetry.max(delta);
            }
        }
        if max_asymmetry > tolerance {
            return Err(Error::NotHermitian { max_asymmetry, tolerance });
        }
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for j in 0..n {
            entries[j * n + j] = Complex64::new(raw[j][j].re, 0.0);
            for k in (j + 1)..n {
                let avg = 0.5 * (raw[j][k] + raw[k][j].conj());
                entries[j * n + k] = avg;
                entries[k * n + j] = avg.conj();
            }
        }
        Ok(Self { n, entries })
    }

    /// Builds from a row-major flat slice of length n*n.
    pub fn from_flat(n: usize, flat: &[Complex64]) -> Result<Self> {
        if n == 0 || flat.len() != n * n {
            return Err(Error::NotSquare { rows: n, cols: if n == 0 { 0 } else { flat.len() / n } });
        }
        let rows: Vec<Vec<Complex64>> = (0..n).map(|j| flat[j * n..(j + 1) * n].to_vec()).collect();
        Self::new(&rows)
    }

    /// Builds from real-valued rows (symmetric input).
    pub fn from_real(raw: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = raw
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::new(&rows)
    }

    /// The n-by-n zero matrix.
    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "order must be positive");
        Self { n, entries: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    /// Diagonal matrix from the given real values.
    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (j, &d) in diag.iter().enumerate() {
            m.entries[j * n + j] = Complex64::new(d, 0.0);
        }
        m
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        Self::from_diagonal(&vec![1.0; n])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.n + col]
    }

    /// Row-major view of all entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Diagonal entries in storage order (real by construction).
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.get(j, j).re).collect()
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> f64 {
        self.diagonal().iter().sum()
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Principal submatrix on the given distinct 0-based indices.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::NotSquare { rows: 0, cols: 0 });
        }
        let mut seen = vec![false; self.n];
        for &i in indices {
            if i >= self.n {
                return Err(Error::IndexOutOfRange { index: i + 1, n: self.n });
            }
            if seen[i] {
                return Err(Error::DuplicateIndex { index: i + 1 });
            }
            seen[i] = true;
        }
        let r = indices.len();
        let mut entries = Vec::with_capacity(r * r);
        for &j in indices {
            for &k in indices {
                entries.push(self.get(j, k));
            }
        }
        Ok(Self { n: r, entries })
    }

    /// Top-left r-by-r principal submatrix.
    pub fn top_left(&self, r: usize) -> Result<Self> {
        if r == 0 || r > self.n {
            return Err(Error::IndexOutOfRange { index: r, n: self.n });
        }
        let indices: Vec<usize> = (0..r).collect();
        self.principal_submatrix(&indices)
    }

    /// Splits into (diagonal part, off-diagonal part); both Hermitian,
    /// summing back to `self` entrywise exactly.
    pub fn split_diag_offdiag(&self) -> (Self, Self) {
        let n = self.n;
        let mut diag = Self::zeros(n);
        let mut off = self.clone();
        for j in 0..n {
            diag.entries[j * n + j] = self.entries[j * n + j];
            off.entries[j * n + j] = Complex64::new(0.0, 0.0);
        }
        (diag, off)
    }

    /// Entrywise negation. Spectrum of the result is the reversed negation
    /// of the spectrum of `self`.
    pub fn negate(&self) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|z| -z).collect() }
    }

    /// Conjugation by a permutation: returns B with B[j][k] = A[p(j)][p(k)].
    ///
    /// `perm[j]` is the 0-based source index feeding row/column j.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::OrderMismatch { left: self.n, right: perm.len() });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n {
                return Err(Error::IndexOutOfRange { index: p + 1, n: self.n });
            }
            if seen[p] {
                return Err(Error::DuplicateIndex { index: p + 1 });
            }
            seen[p] = true;
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                entries.push(self.get(perm[j], perm[k]));
            }
        }
        Ok(Self { n, entries })
    }

    /// Entrywise sum. Errors on order mismatch.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::OrderMismatch { left: self.n, right: other.n });
        }
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { n: self.n, entries })
    }

    /// Scalar multiple by a real factor.
    pub fn scale(&self, c: f64) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|z| c * z).collect() }
    }

    /// Matrix-vector product y = A x.
    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        debug_assert_eq!(x.len(), n);
        let mut y = vec![Complex64::new(0.0, 0.0); n];
        for j in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                acc += self.entries[j * n + k] * x[k];
            }
            y[j] = acc;
        }
        y
    }
}

/// Ascending diagonal entries of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalVector {
    values: Vec<f64>,
}

impl DiagonalVector {
    pub fn of(matrix: &HermitianMatrix) -> Self {
        let mut values = matrix.diagonal();
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// 1-based accessor matching the usual a_1 <= ... <= a_n notation.
    pub fn entry(&self, k: usize) -> f64 {
        self.values[k - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
