//! Checkers for the eigenvalue-diagonal inequalities and numeric
//! certificates replaying their proof chains.
//!
//! Throughout, eigenvalues and diagonal entries are ascending and indices
//! are 1-based in reports: `lambda_1 <= ... <= lambda_n` and
//! `a_1 <= ... <= a_n`. The two homegrown checks are
//!
//! * `thm1`: `lambda_2 <= a_3` whenever the off-diagonal entries are all
//!   nonnegative reals or all purely imaginary (more generally whenever the
//!   zero-diagonal 3x3 block of the sorted matrix has nonnegative
//!   determinant), plus `lambda_{n-1} >= a_{n-2}` in the purely imaginary
//!   case;
//! * `thm2`: `lambda_k <= a_{2k-1}` and `lambda_{n-k+1} >= a_{n-2k+2}` for
//!   `k = 1..ceil(n/2)` in the purely imaginary case.
//!
//! Every check reports a signed worst slack (right-hand side minus left-hand
//! side, minimized over the quantified comparisons); a check holds when the
//! worst slack is above `-tolerance`.

use crate::classes::{self, ClassTag};
use crate::eigen::{eigenvalues, Spectrum};
use crate::error::{Error, Result};
use crate::matrix::{DiagonalVector, HermitianMatrix};

/// Comparison tolerance factor; the working tolerance is
/// `1e-9 * max(1, ||A||_F)` so exact equality cases always pass.
pub const COMPARISON_TOLERANCE: f64 = 1e-9;

/// Working tolerance for checks on `matrix`.
pub fn tolerance(matrix: &HermitianMatrix) -> f64 {
    COMPARISON_TOLERANCE * matrix.frobenius_norm().max(1.0)
}

/// Which side of the paired eigenvalue-diagonal bounds is being checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// lambda_k <= a_{2k-1}
    Lower,
    /// lambda_{n-k+1} >= a_{n-2k+2}
    Upper,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Lower => "lower",
            Family::Upper => "upper",
        }
    }
}

/// Signed slack of one family comparison at index `k` (1-based), given
/// ascending eigenvalues and ascending diagonal entries.
pub fn family_slack(family: Family, k: usize, eigen: &[f64], diag: &[f64]) -> f64 {
    let n = eigen.len();
    debug_assert_eq!(n, diag.len());
    debug_assert!(k >= 1 && k <= n.div_ceil(2));
    match family {
        Family::Lower => diag[2 * k - 2] - eigen[k - 1],
        Family::Upper => eigen[n - k] - diag[n + 1 - 2 * k],
    }
}

/// One evaluated comparison: which sub-inequality, at which 1-based index,
/// with what signed slack.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub part: &'static str,
    pub index: usize,
    pub slack: f64,
}

/// Outcome of a checker over all its quantified comparisons.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub name: &'static str,
    pub holds: bool,
    /// Minimum slack over all comparisons; negative beyond tolerance means
    /// violation.
    pub worst_slack: f64,
    /// The comparison achieving the worst slack.
    pub witness: Comparison,
    /// Names of the sub-inequalities that were evaluated.
    pub parts: Vec<&'static str>,
    pub tolerance: f64,
    /// Set when the check was forced on a matrix outside its classes.
    pub unsupported_class: bool,
}

impl InequalityReport {
    fn from_comparisons(
        name: &'static str,
        comparisons: Vec<Comparison>,
        tolerance: f64,
        unsupported_class: bool,
    ) -> Self {
        assert!(!comparisons.is_empty());
        let mut parts: Vec<&'static str> = Vec::new();
        for c in &comparisons {
            if !parts.contains(&c.part) {
                parts.push(c.part);
            }
        }
        let witness = comparisons
            .iter()
            .min_by(|a, b| a.slack.partial_cmp(&b.slack).unwrap())
            .unwrap()
            .clone();
        let worst_slack = witness.slack;
        InequalityReport {
            name,
            holds: worst_slack >= -tolerance,
            worst_slack,
            witness,
            parts,
            tolerance,
            unsupported_class,
        }
    }
}

fn spectrum_of(matrix: &HermitianMatrix) -> Result<Spectrum> {
    eigenvalues(matrix)
}

/// lambda_1 <= a_1 and lambda_n >= a_n.
pub fn check_basic_bounds(matrix: &HermitianMatrix) -> Result<InequalityReport> {
    let spectrum = spectrum_of(matrix)?;
    let diag = DiagonalVector::of(matrix);
    let n = matrix.order();
    let comparisons = vec![
        Comparison {
            part: "lambda1_le_a1",
            index: 1,
            slack: diag.entry(1) - spectrum.value(1),
        },
        Comparison {
            part: "lambdan_ge_an",
            index: n,
            slack: spectrum.value(n) - diag.entry(n),
        },
    ];
    Ok(InequalityReport::from_comparisons(
        "basic",
        comparisons,
        tolerance(matrix),
        false,
    ))
}

/// Ascending partial sums of eigenvalues are bounded by those of the
/// diagonal, with equality for the full sum.
pub fn check_schur_majorization(matrix: &HermitianMatrix) -> Result<InequalityReport> {
    let spectrum = spectrum_of(matrix)?;
    let diag = DiagonalVector::of(matrix);
    let n = matrix.order();
    let mut comparisons = Vec::with_capacity(n);
    let mut sum_lambda = 0.0;
    let mut sum_a = 0.0;
    for k in 1..=n {
        sum_lambda += spectrum.value(k);
        sum_a += diag.entry(k);
        if k < n {
            comparisons.push(Comparison {
                part: "partial_sum",
                index: k,
                slack: sum_a - sum_lambda,
            });
        } else {
            comparisons.push(Comparison {
                part: "trace_equality",
                index: n,
                slack: -(sum_lambda - sum_a).abs(),
            });
        }
    }
    Ok(InequalityReport::from_comparisons(
        "schur",
        comparisons,
        tolerance(matrix),
        false,
    ))
}

/// lambda_j(A + B) <= lambda_j(A) + lambda_n(B) for all j.
pub fn check_weyl(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<InequalityReport> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch { left: a.order(), right: b.order() });
    }
    let sum = a.add(b)?;
    let spec_sum = spectrum_of(&sum)?;
    let spec_a = spectrum_of(a)?;
    let spec_b = spectrum_of(b)?;
    let lambda_max_b = spec_b.max();
    let n = a.order();
    let comparisons: Vec<Comparison> = (1..=n)
        .map(|j| Comparison {
            part: "additive_bound",
            index: j,
            slack: spec_a.value(j) + lambda_max_b - spec_sum.value(j),
        })
        .collect();
    let tol = COMPARISON_TOLERANCE * (a.frobenius_norm() + b.frobenius_norm()).max(1.0);
    Ok(InequalityReport::from_comparisons("weyl", comparisons, tol, false))
}

/// lambda_j(A) <= lambda_j(A_r) for the top-left r-by-r principal
/// submatrix, j = 1..r.
pub fn check_interlacing(matrix: &HermitianMatrix, r: usize) -> Result<InequalityReport> {
    let n = matrix.order();
    if r == 0 || r > n {
        return Err(Error::IndexOutOfRange { index: r, n });
    }
    let spectrum = spectrum_of(matrix)?;
    let sub = matrix.top_left(r)?;
    let spec_sub = spectrum_of(&sub)?;
    let comparisons: Vec<Comparison> = (1..=r)
        .map(|j| Comparison {
            part: "interlacing",
            index: j,
            slack: spec_sub.value(j) - spectrum.value(j),
        })
        .collect();
    Ok(InequalityReport::from_comparisons(
        "interlace",
        comparisons,
        tolerance(matrix),
        false,
    ))
}

/// lambda_2 <= a_3 for matrices whose off-diagonal entries are all
/// nonnegative reals or all purely imaginary (or whose sorted 3x3
/// zero-diagonal block has nonnegative determinant); additionally
/// lambda_{n-1} >= a_{n-2} in the purely imaginary case.
///
/// With `force`, both parts are evaluated regardless of class and the
/// report records whether the matrix was outside every supported class.
pub fn check_theorem1(matrix: &HermitianMatrix, force: bool) -> Result<InequalityReport> {
    let n = matrix.order();
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    let tags = classes::classify(matrix);
    let applicable = tags.contains(&ClassTag::ClassP)
        || tags.contains(&ClassTag::ClassI)
        || tags.contains(&ClassTag::DetM3Nonneg);
    if !applicable && !force {
        return Err(Error::ClassNotApplicable { check: "thm1" });
    }
    let (sorted, _) = classes::normalize_diagonal_order(matrix);
    let spectrum = spectrum_of(&sorted)?;
    let diag = sorted.diagonal();

    let mut comparisons = vec![Comparison {
        part: "lambda2_le_a3",
        index: 2,
        slack: family_slack(Family::Lower, 2, spectrum.values(), &diag),
    }];
    if tags.contains(&ClassTag::ClassI) || force {
        comparisons.push(Comparison {
            part: "lambda_nm1_ge_a_nm2",
            index: 2,
            slack: family_slack(Family::Upper, 2, spectrum.values(), &diag),
        });
    }
    Ok(InequalityReport::from_comparisons(
        "thm1",
        comparisons,
        tolerance(matrix),
        !applicable,
    ))
}

/// Both bound families lambda_k <= a_{2k-1} and lambda_{n-k+1} >=
/// a_{n-2k+2} for k = 1..ceil(n/2); applies to matrices with purely
/// imaginary off-diagonal entries unless `force` is set.
pub fn check_theorem2(matrix: &HermitianMatrix, force: bool) -> Result<InequalityReport> {
    let tags = classes::classify(matrix);
    let applicable = tags.contains(&ClassTag::ClassI);
    if !applicable && !force {
        return Err(Error::ClassNotApplicable { check: "thm2" });
    }
    let (sorted, _) = classes::normalize_diagonal_order(matrix);
    let spectrum = spectrum_of(&sorted)?;
    let diag = sorted.diagonal();
    let n = matrix.order();

    let mut comparisons = Vec::with_capacity(n + 1);
    for k in 1..=n.div_ceil(2) {
        comparisons.push(Comparison {
            part: "lower",
            index: k,
            slack: family_slack(Family::Lower, k, spectrum.values(), &diag),
        });
        comparisons.push(Comparison {
            part: "upper",
            index: k,
            slack: family_slack(Family::Upper, k, spectrum.values(), &diag),
        });
    }
    Ok(InequalityReport::from_comparisons(
        "thm2",
        comparisons,
        tolerance(matrix),
        !applicable,
    ))
}

/// Per-k record of the proof-chain quantities
/// `lambda_k(A) <= lambda_k(A_{2k-1}) <= lambda_k(M_{2k-1}) + a_{2k-1}
/// <= a_{2k-1}` over the diagonal-sorted matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub k: usize,
    /// lambda_k of the full matrix.
    pub lambda_k_a: f64,
    /// lambda_k of the top-left (2k-1)-by-(2k-1) block.
    pub lambda_k_sub: f64,
    /// lambda_k of the zero-diagonal part of that block.
    pub lambda_k_m: f64,
    /// a_{2k-1}, the largest diagonal entry of the block.
    pub a_target: f64,
    pub chain_valid: bool,
    pub tolerance: f64,
}

impl Certificate {
    fn build(
        k: usize,
        lambda_k_a: f64,
        lambda_k_sub: f64,
        lambda_k_m: f64,
        a_target: f64,
        tol: f64,
    ) -> Self {
        let chain_valid = lambda_k_a <= lambda_k_sub + tol
            && lambda_k_sub <= lambda_k_m + a_target + tol
            && lambda_k_m <= tol;
        Certificate {
            k,
            lambda_k_a,
            lambda_k_sub,
            lambda_k_m,
            a_target,
            chain_valid,
            tolerance: tol,
        }
    }
}

fn certificate_at(matrix: &HermitianMatrix, k: usize) -> Result<Certificate> {
    let (sorted, _) = classes::normalize_diagonal_order(matrix);
    let r = 2 * k - 1;
    let spectrum = spectrum_of(&sorted)?;
    let block = sorted.top_left(r)?;
    let (_, off_part) = block.split_diag_offdiag();
    debug_assert_eq!(off_part.trace(), 0.0);
    let spec_block = spectrum_of(&block)?;
    let spec_off = spectrum_of(&off_part)?;
    let a_target = sorted.get(r - 1, r - 1).re;
    Ok(Certificate::build(
        k,
        spectrum.value(k),
        spec_block.value(k),
        spec_off.value(k),
        a_target,
        tolerance(matrix),
    ))
}

/// Certificate for the k = 2 chain under the determinant hypothesis: checks
/// lambda_2(A) <= lambda_2(A_3), lambda_2(A_3) <= lambda_2(M_3) + a_3, and
/// lambda_2(M_3) <= 0 at tolerance.
pub fn certify_theorem1(matrix: &HermitianMatrix) -> Result<Certificate> {
    let n = matrix.order();
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    let det = classes::det_m3(matrix)?;
    let det_tol = classes::det_m3_tolerance(matrix);
    if det < -det_tol {
        return Err(Error::HypothesisViolated { det_m3: det, tolerance: det_tol });
    }
    certificate_at(matrix, 2)
}

/// Certificate for the k-th chain of the purely imaginary case,
/// 1 <= k <= ceil(n/2).
pub fn certify_theorem2(matrix: &HermitianMatrix, k: usize) -> Result<Certificate> {
    let tags = classes::classify(matrix);
    if !tags.contains(&ClassTag::ClassI) {
        return Err(Error::ClassNotApplicable { check: "certify-thm2" });
    }
    let n = matrix.order();
    if k == 0 || k > n.div_ceil(2) {
        return Err(Error::IndexOutOfRange { index: k, n: n.div_ceil(2) });
    }
    certificate_at(matrix, k)
}

/// Spectrum structure of a zero-diagonal matrix with purely imaginary
/// entries: eigenvalues occur in +/- pairs (so the lower half is
/// nonpositive, and odd orders have a zero eigenvalue).
pub fn offdiagonal_spectrum_pairing(
    matrix: &HermitianMatrix,
    force: bool,
) -> Result<InequalityReport> {
    let r = matrix.order();
    let zero_tol = classes::CLASS_TOLERANCE * matrix.max_abs().max(1.0);
    for (j, d) in matrix.diagonal().iter().enumerate() {
        if d.abs() > zero_tol {
            return Err(Error::NotZeroDiagonal { index: j + 1, value: *d });
        }
    }
    let tags = classes::classify(matrix);
    let applicable = tags.contains(&ClassTag::ClassI);
    if !applicable && !force {
        return Err(Error::ClassNotApplicable { check: "pairing" });
    }
    let spectrum = spectrum_of(matrix)?;
    let values = spectrum.values();

    let mut comparisons = Vec::new();
    for j in 1..=r {
        comparisons.push(Comparison {
            part: "symmetric_pairs",
            index: j,
            slack: -(values[j - 1] + values[r - j]).abs(),
        });
    }
    for k in 1..=r.div_ceil(2) {
        comparisons.push(Comparison {
            part: "lower_half_nonpositive",
            index: k,
            slack: -values[k - 1],
        });
    }
    if r % 2 == 1 {
        let mid = r.div_ceil(2);
        comparisons.push(Comparison {
            part: "middle_zero",
            index: mid,
            slack: -values[mid - 1].abs(),
        });
    }
    Ok(InequalityReport::from_comparisons(
        "pairing",
        comparisons,
        tolerance(matrix),
        !applicable,
    ))
}
