//! Matrix class membership, diagonal normalization, seeded random
//! generators, and the signless Laplacian constructor.
//!
//! Two classes drive the inequality checks: `P` (every off-diagonal entry a
//! nonnegative real) and `I` (every off-diagonal entry purely imaginary).
//! `DetM3Nonneg` captures the weaker hypothesis that the zero-diagonal part
//! of the top-left 3x3 block of the diagonal-sorted matrix has nonnegative
//! determinant; both `P` and `I` imply it.

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;

/// Entry classification tolerance, relative to `max(1, maxabs)`.
pub const CLASS_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClassTag {
    /// Off-diagonal entries are nonnegative reals.
    ClassP,
    /// Off-diagonal entries are purely imaginary.
    ClassI,
    /// det of the zero-diagonal 3x3 block of the sorted matrix is >= 0.
    DetM3Nonneg,
    /// Every Hermitian matrix.
    General,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClassTag::ClassP => "P",
            ClassTag::ClassI => "I",
            ClassTag::DetM3Nonneg => "det-m3-nonneg",
            ClassTag::General => "general",
        };
        f.write_str(name)
    }
}

/// All class tags whose predicate holds for `matrix`.
///
/// `General` is always included. Exact zero off-diagonals satisfy both `P`
/// and `I`. All comparisons use [`CLASS_TOLERANCE`] relative to the largest
/// entry magnitude so serialization round-trips do not flip membership.
pub fn classify(matrix: &HermitianMatrix) -> BTreeSet<ClassTag> {
    let n = matrix.order();
    let tol = CLASS_TOLERANCE * matrix.max_abs().max(1.0);

    let mut is_p = true;
    let mut is_i = true;
    for j in 0..n {
        for k in 0..n {
            if j == k {
                continue;
            }
            let z = matrix.get(j, k);
            if z.im.abs() > tol || z.re < -CLASS_TOLERANCE {
                is_p = false;
            }
            if z.re.abs() > tol {
                is_i = false;
            }
        }
    }

    let mut tags = BTreeSet::new();
    tags.insert(ClassTag::General);
    if is_p {
        tags.insert(ClassTag::ClassP);
    }
    if is_i {
        tags.insert(ClassTag::ClassI);
    }
    // Matrices too small to have a 3x3 block satisfy the hypothesis
    // vacuously.
    if n < 3 || det_m3(matrix).unwrap() >= -det_m3_tolerance(matrix) {
        tags.insert(ClassTag::DetM3Nonneg);
    }
    tags
}

/// Tolerance for the determinant test, scaled by maxabs^3.
pub fn det_m3_tolerance(matrix: &HermitianMatrix) -> f64 {
    CLASS_TOLERANCE * matrix.max_abs().max(1.0).powi(3)
}

/// Permutation that conjugates a matrix into ascending-diagonal order.
///
/// `source(j)` is the 0-based original index moved to position j; stable in
/// the original order on ties, so repeated runs give identical results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn source(&self, j: usize) -> usize {
        self.0[j]
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// 1-based image for reports: element j holds the original position of
    /// the row now at j.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &i)| j == i)
    }
}

/// Conjugates by a permutation so the diagonal is ascending. Eigenvalues and
/// class membership are unchanged.
pub fn normalize_diagonal_order(matrix: &HermitianMatrix) -> (HermitianMatrix, Permutation) {
    let diag = matrix.diagonal();
    let mut order: Vec<usize> = (0..matrix.order()).collect();
    order.sort_by(|&a, &b| diag[a].partial_cmp(&diag[b]).unwrap().then(a.cmp(&b)));
    let sorted = matrix.permute(&order).expect("permutation is valid by construction");
    (sorted, Permutation(order))
}

/// Inclusive real interval for the random diagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagRange {
    pub lo: f64,
    pub hi: f64,
}

impl DiagRange {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(Error::InvalidRange { what: "diagonal range" });
        }
        Ok(Self { lo, hi })
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        self.lo + rng.gen::<f64>() * (self.hi - self.lo)
    }

    fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

impl Default for DiagRange {
    fn default() -> Self {
        Self { lo: 0.0, hi: 1.0 }
    }
}

fn check_offdiag_max(offdiag_max: f64) -> Result<()> {
    if !offdiag_max.is_finite() || offdiag_max < 0.0 {
        return Err(Error::InvalidRange { what: "off-diagonal maximum" });
    }
    Ok(())
}

/// Deterministic random matrix with nonnegative real off-diagonals.
///
/// Draw order is fixed: n diagonal entries from `diag_range`, then the
/// strict upper triangle row by row, uniform on `[0, offdiag_max]`. The
/// stream is ChaCha8 seeded from `seed`, so equal inputs give bitwise-equal
/// matrices.
pub fn random_class_p(
    n: usize,
    seed: u64,
    diag_range: DiagRange,
    offdiag_max: f64,
) -> Result<HermitianMatrix> {
    check_offdiag_max(offdiag_max)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_class_p(n, &mut rng, diag_range, offdiag_max, false)
}

/// As [`random_class_p`] with purely imaginary off-diagonals `i*u`,
/// `u` uniform on `[-offdiag_max, offdiag_max]`.
pub fn random_class_i(
    n: usize,
    seed: u64,
    diag_range: DiagRange,
    offdiag_max: f64,
) -> Result<HermitianMatrix> {
    check_offdiag_max(offdiag_max)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_class_i(n, &mut rng, diag_range, offdiag_max, false)
}

/// One class-P draw from an existing stream. With `quantize`, every drawn
/// value snaps to 0 or 1 at the midpoint of its range, mimicking 0/1
/// combinatorial matrices.
pub(crate) fn sample_class_p<R: Rng>(
    n: usize,
    rng: &mut R,
    diag_range: DiagRange,
    offdiag_max: f64,
    quantize: bool,
) -> Result<HermitianMatrix> {
    if n == 0 {
        return Err(Error::NotSquare { rows: 0, cols: 0 });
    }
    let mut rows = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (j, row) in rows.iter_mut().enumerate() {
        let mut d = diag_range.sample(rng);
        if quantize {
            d = if d >= diag_range.midpoint() { 1.0 } else { 0.0 };
        }
        row[j] = Complex64::new(d, 0.0);
    }
    for j in 0..n {
        for k in (j + 1)..n {
            let mut u = rng.gen::<f64>() * offdiag_max;
            if quantize {
                u = if u >= 0.5 * offdiag_max { 1.0 } else { 0.0 };
            }
            rows[j][k] = Complex64::new(u, 0.0);
            rows[k][j] = Complex64::new(u, 0.0);
        }
    }
    HermitianMatrix::new(&rows)
}

/// One class-I draw from an existing stream; see [`sample_class_p`].
pub(crate) fn sample_class_i<R: Rng>(
    n: usize,
    rng: &mut R,
    diag_range: DiagRange,
    offdiag_max: f64,
    quantize: bool,
) -> Result<HermitianMatrix> {
    if n == 0 {
        return Err(Error::NotSquare { rows: 0, cols: 0 });
    }
    let mut rows = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (j, row) in rows.iter_mut().enumerate() {
        let mut d = diag_range.sample(rng);
        if quantize {
            d = if d >= diag_range.midpoint() { 1.0 } else { 0.0 };
        }
        row[j] = Complex64::new(d, 0.0);
    }
    for j in 0..n {
        for k in (j + 1)..n {
            let mut u = (2.0 * rng.gen::<f64>() - 1.0) * offdiag_max;
            if quantize {
                u = if u >= 0.0 { 1.0 } else { 0.0 };
            }
            rows[j][k] = Complex64::new(0.0, u);
            rows[k][j] = Complex64::new(0.0, -u);
        }
    }
    HermitianMatrix::new(&rows)
}

/// Simple weighted graph: no loops, no multi-edges, strictly positive
/// weights. Vertices are 0-based internally.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n_vertices: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl WeightedGraph {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::InvalidRange { what: "vertex count" });
        }
        let mut seen = BTreeSet::new();
        for &(u, v, w) in &edges {
            if u >= n_vertices {
                return Err(Error::IndexOutOfRange { index: u + 1, n: n_vertices });
            }
            if v >= n_vertices {
                return Err(Error::IndexOutOfRange { index: v + 1, n: n_vertices });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u + 1 });
            }
            if !w.is_finite() || w <= 0.0 {
                return Err(Error::InvalidRange { what: "edge weight" });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { u: key.0 + 1, v: key.1 + 1 });
            }
        }
        Ok(Self { n_vertices, edges })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }
}

/// Signless Laplacian Q = D + W: weighted degrees on the diagonal plus the
/// symmetric weight matrix. Entrywise nonnegative (class P) and positive
/// semidefinite.
pub fn signless_laplacian(graph: &WeightedGraph) -> HermitianMatrix {
    let n = graph.n_vertices();
    let mut rows = vec![vec![0.0f64; n]; n];
    for &(u, v, w) in graph.edges() {
        rows[u][v] += w;
        rows[v][u] += w;
        rows[u][u] += w;
        rows[v][v] += w;
    }
    HermitianMatrix::from_real(&rows).expect("construction is symmetric and finite")
}

/// Twice the real part of a12 * a23 * conj(a13) over the diagonal-sorted
/// matrix; equals the determinant of the zero-diagonal part of its top-left
/// 3x3 block.
pub fn det_m3(matrix: &HermitianMatrix) -> Result<f64> {
    if matrix.order() < 3 {
        return Err(Error::OrderTooSmall { n: matrix.order(), min: 3 });
    }
    let (sorted, _) = normalize_diagonal_order(matrix);
    let a12 = sorted.get(0, 1);
    let a23 = sorted.get(1, 2);
    let a13 = sorted.get(0, 2);
    Ok(2.0 * (a12 * a23 * a13.conj()).re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::eigenvalues;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_matrix_is_in_every_class() {
        let m = HermitianMatrix::from_diagonal(&[1.0, 2.0, 3.0]);
        let tags = classify(&m);
        assert!(tags.contains(&ClassTag::ClassP));
        assert!(tags.contains(&ClassTag::ClassI));
        assert!(tags.contains(&ClassTag::DetM3Nonneg));
        assert!(tags.contains(&ClassTag::General));
    }

    #[test]
    fn all_ones_offdiagonal_is_p_not_i() {
        let mut rows = vec![vec![1.0; 4]; 4];
        for j in 0..4 {
            rows[j][j] = 0.0;
        }
        let m = HermitianMatrix::from_real(&rows).unwrap();
        let tags = classify(&m);
        assert!(tags.contains(&ClassTag::ClassP));
        assert!(!tags.contains(&ClassTag::ClassI));
    }

    #[test]
    fn imaginary_offdiagonal_is_i_not_p() {
        let raw = vec![vec![c(0.0, 0.0), c(0.0, 2.0)], vec![c(0.0, -2.0), c(0.0, 0.0)]];
        let m = HermitianMatrix::new(&raw).unwrap();
        let tags = classify(&m);
        assert!(tags.contains(&ClassTag::ClassI));
        assert!(!tags.contains(&ClassTag::ClassP));
    }

    #[test]
    fn normalize_sorts_and_reports_permutation() {
        let m = HermitianMatrix::from_diagonal(&[3.0, 1.0, 2.0]);
        let (sorted, perm) = normalize_diagonal_order(&m);
        assert_eq!(sorted.diagonal(), vec![1.0, 2.0, 3.0]);
        assert_eq!(perm.one_based(), vec![2, 3, 1]);
    }

    #[test]
    fn normalize_is_identity_on_sorted_input() {
        let m = HermitianMatrix::from_diagonal(&[1.0, 1.0, 2.0]);
        let (_, perm) = normalize_diagonal_order(&m);
        assert!(perm.is_identity());
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_class_p(5, 17, DiagRange::default(), 1.0).unwrap();
        let b = random_class_p(5, 17, DiagRange::default(), 1.0).unwrap();
        assert_eq!(a, b);
        let x = random_class_i(5, 17, DiagRange::default(), 1.0).unwrap();
        let y = random_class_i(5, 17, DiagRange::default(), 1.0).unwrap();
        assert_eq!(x, y);
        assert_ne!(a, x);
    }

    #[test]
    fn zero_offdiag_max_gives_diagonal_matrix() {
        let m = random_class_p(4, 3, DiagRange::new(-2.0, 2.0).unwrap(), 0.0).unwrap();
        for j in 0..4 {
            for k in 0..4 {
                if j != k {
                    assert_eq!(m.get(j, k), c(0.0, 0.0));
                }
            }
        }
        let m = random_class_i(4, 3, DiagRange::default(), 0.0).unwrap();
        for j in 0..4 {
            for k in 0..4 {
                if j != k {
                    assert_eq!(m.get(j, k), c(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn generated_matrices_classify_as_requested() {
        for seed in 0..20 {
            let p = random_class_p(5, seed, DiagRange::new(-1.0, 3.0).unwrap(), 2.0).unwrap();
            assert!(classify(&p).contains(&ClassTag::ClassP), "seed {seed}");
            let i = random_class_i(5, seed, DiagRange::new(-1.0, 3.0).unwrap(), 2.0).unwrap();
            assert!(classify(&i).contains(&ClassTag::ClassI), "seed {seed}");
        }
    }

    #[test]
    fn invalid_generator_parameters_error() {
        assert!(DiagRange::new(1.0, 0.0).is_err());
        assert!(random_class_p(3, 0, DiagRange::default(), -1.0).is_err());
    }

    #[test]
    fn edgeless_graph_gives_zero_matrix() {
        let g = WeightedGraph::new(3, vec![]).unwrap();
        assert_eq!(signless_laplacian(&g), HermitianMatrix::zeros(3));
    }

    #[test]
    fn single_edge_laplacian() {
        let g = WeightedGraph::new(2, vec![(0, 1, 2.5)]).unwrap();
        let q = signless_laplacian(&g);
        assert_eq!(q.get(0, 0), c(2.5, 0.0));
        assert_eq!(q.get(0, 1), c(2.5, 0.0));
        let s = eigenvalues(&q).unwrap();
        assert!((s.value(1) - 0.0).abs() <= 1e-12);
        assert!((s.value(2) - 5.0).abs() <= 1e-12);
    }

    #[test]
    fn triangle_laplacian_spectrum() {
        let g = WeightedGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let q = signless_laplacian(&g);
        assert_eq!(q.diagonal(), vec![2.0, 2.0, 2.0]);
        let s = eigenvalues(&q).unwrap();
        // Q = I + (all-ones), so the spectrum is (1, 1, 4).
        assert!((s.value(1) - 1.0).abs() <= 1e-12);
        assert!((s.value(2) - 1.0).abs() <= 1e-12);
        assert!((s.value(3) - 4.0).abs() <= 1e-12);
    }

    #[test]
    fn graph_validation_errors() {
        assert_eq!(
            WeightedGraph::new(3, vec![(1, 1, 1.0)]),
            Err(Error::SelfLoop { vertex: 2 })
        );
        assert_eq!(
            WeightedGraph::new(3, vec![(0, 1, 1.0), (1, 0, 2.0)]),
            Err(Error::DuplicateEdge { u: 1, v: 2 })
        );
        assert!(WeightedGraph::new(3, vec![(0, 1, 0.0)]).is_err());
        assert!(WeightedGraph::new(2, vec![(0, 2, 1.0)]).is_err());
    }

    #[test]
    fn det_m3_matches_spec_examples() {
        // a12 = 1, a23 = 2, a13 = -1 on a zero diagonal.
        let raw = vec![
            vec![c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)],
            vec![c(-1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)],
        ];
        let m = HermitianMatrix::new(&raw).unwrap();
        assert!((det_m3(&m).unwrap() + 4.0).abs() <= 1e-12);

        // All off-diagonals i: product of three imaginaries is imaginary.
        let raw = vec![
            vec![c(0.0, 0.0), c(0.0, 1.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(0.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(0.0, -1.0), c(0.0, 0.0)],
        ];
        let m = HermitianMatrix::new(&raw).unwrap();
        assert!(det_m3(&m).unwrap().abs() <= 1e-12);
    }

    #[test]
    fn det_m3_requires_order_three() {
        let m = HermitianMatrix::identity(2);
        assert_eq!(det_m3(&m), Err(Error::OrderTooSmall { n: 2, min: 3 }));
    }
}
