//! Exact counterexample constructions and a seeded random search for
//! violations of the paired eigenvalue-diagonal bounds.
//!
//! Both constructed matrices have nonnegative off-diagonal entries and show
//! that the purely-imaginary-only conclusions genuinely fail outside that
//! class: the 4x4 all-ones-off-diagonal matrix violates
//! `lambda_{n-1} >= a_{n-2}`, and the 5x5 circulant `S^2 + S^3` (S the cyclic
//! shift) violates `lambda_3 <= a_5`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classes::{self, ClassTag, DiagRange};
use crate::eigen::eigenvalues;
use crate::error::{Error, Result};
use crate::inequality::{family_slack, Family, COMPARISON_TOLERANCE};
use crate::matrix::HermitianMatrix;
use crate::oracle::oracle_eigenvalues;

/// The 4x4 matrix with zero diagonal and all off-diagonal entries one
/// (all-ones matrix minus identity). Spectrum (-1, -1, -1, 3).
pub fn counterexample_e_minus_i() -> HermitianMatrix {
    let mut rows = vec![vec![1.0; 4]; 4];
    for (j, row) in rows.iter_mut().enumerate() {
        row[j] = 0.0;
    }
    HermitianMatrix::from_real(&rows).expect("constant matrix is symmetric")
}

/// The 5x5 circulant S^2 + S^3 where S is the cyclic shift matrix; row 0 is
/// (0, 0, 1, 1, 0). Spectrum is twice the real parts of fifth roots of
/// unity: (-(1+sqrt5)/2 twice, (sqrt5-1)/2 twice, 2).
pub fn counterexample_shift_circulant() -> HermitianMatrix {
    let n = 5;
    let mut rows = vec![vec![0.0; n]; n];
    for j in 0..n {
        rows[j][(j + 2) % n] += 1.0;
        rows[j][(j + 3) % n] += 1.0;
    }
    HermitianMatrix::from_real(&rows).expect("circulant sum is symmetric")
}

/// Which matrix class the search samples from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchClass {
    ClassP,
    ClassI,
}

impl SearchClass {
    pub fn tag(self) -> ClassTag {
        match self {
            SearchClass::ClassP => ClassTag::ClassP,
            SearchClass::ClassI => ClassTag::ClassI,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SearchClass::ClassP => "P",
            SearchClass::ClassI => "I",
        }
    }
}

/// A fully specified violation search: deterministic in all its fields.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchTask {
    pub target_class: SearchClass,
    pub family: Family,
    pub k: usize,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub diag_range: DiagRange,
    pub offdiag_max: f64,
    /// Snap drawn entries to 0/1, mimicking the combinatorial structure of
    /// the constructed counterexamples.
    pub quantize: bool,
}

impl SearchTask {
    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidTask { reason: "n must be at least 1".into() });
        }
        if self.trials == 0 {
            return Err(Error::InvalidTask { reason: "trials must be at least 1".into() });
        }
        if self.k == 0 || self.k > self.n.div_ceil(2) {
            return Err(Error::InvalidTask {
                reason: format!("k = {} outside 1..={}", self.k, self.n.div_ceil(2)),
            });
        }
        if !self.offdiag_max.is_finite() || self.offdiag_max < 0.0 {
            return Err(Error::InvalidTask { reason: "offdiag_max must be finite and >= 0".into() });
        }
        Ok(())
    }
}

/// A violating matrix together with the evidence that reproduces it.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub matrix: HermitianMatrix,
    /// Slack from the primary eigensolver (negative beyond tolerance).
    pub slack: f64,
    /// Slack recomputed through the bisection oracle.
    pub oracle_slack: f64,
    /// Trial index that produced the matrix; the per-trial stream seed is
    /// `task.seed ^ trial_index`.
    pub trial_index: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub violations_found: u64,
    pub first_witness: Option<Witness>,
    pub trials_run: u64,
}

/// Runs exactly `task.trials` generator draws and reports the violations of
/// the targeted inequality.
///
/// Each trial draws from a fresh ChaCha8 stream seeded with
/// `seed ^ trial_index`, so any witness is replayable from the task
/// description alone. A violation counts only if the independent bisection
/// oracle confirms a slack below half the tolerance, so a solver bug cannot
/// manufacture counterexamples.
pub fn search_violations(task: &SearchTask) -> Result<SearchOutcome> {
    task.validate()?;
    let mut violations = 0u64;
    let mut first_witness: Option<Witness> = None;

    for trial in 0..task.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(task.seed ^ trial);
        let matrix = match task.target_class {
            SearchClass::ClassP => classes::sample_class_p(
                task.n,
                &mut rng,
                task.diag_range,
                task.offdiag_max,
                task.quantize,
            )?,
            SearchClass::ClassI => classes::sample_class_i(
                task.n,
                &mut rng,
                task.diag_range,
                task.offdiag_max,
                task.quantize,
            )?,
        };

        let (sorted, _) = classes::normalize_diagonal_order(&matrix);
        let spectrum = eigenvalues(&sorted)?;
        let diag = sorted.diagonal();
        let tol = COMPARISON_TOLERANCE * matrix.frobenius_norm().max(1.0);
        let slack = family_slack(task.family, task.k, spectrum.values(), &diag);
        if slack >= -tol {
            continue;
        }

        // Independent confirmation before the witness is believed.
        let oracle_spectrum = oracle_eigenvalues(&sorted)?;
        let oracle_slack = family_slack(task.family, task.k, oracle_spectrum.values(), &diag);
        if oracle_slack >= -0.5 * tol {
            continue;
        }

        violations += 1;
        if first_witness.is_none() {
            first_witness = Some(Witness {
                matrix,
                slack,
                oracle_slack,
                trial_index: trial,
            });
        }
    }

    Ok(SearchOutcome {
        violations_found: violations,
        first_witness,
        trials_run: task.trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequality::{check_theorem1, check_theorem2};

    const GOLDEN_LO: f64 = -1.618033988749894848; // 2 cos(4 pi / 5)
    const GOLDEN_HI: f64 = 0.618033988749894848; // 2 cos(2 pi / 5)

    #[test]
    fn e_minus_i_spectrum_and_class() {
        let m = counterexample_e_minus_i();
        let s = eigenvalues(&m).unwrap();
        let expected = [-1.0, -1.0, -1.0, 3.0];
        for (v, e) in s.values().iter().zip(expected.iter()) {
            assert!((v - e).abs() <= 1e-10);
        }
        assert!(classes::classify(&m).contains(&ClassTag::ClassP));
    }

    #[test]
    fn e_minus_i_violates_only_the_imaginary_part() {
        let m = counterexample_e_minus_i();
        let unforced = check_theorem1(&m, false).unwrap();
        assert!(unforced.holds);
        let forced = check_theorem1(&m, true).unwrap();
        assert!(!forced.holds);
        assert!((forced.worst_slack + 1.0).abs() <= 1e-9);
    }

    #[test]
    fn shift_circulant_rows_and_spectrum() {
        let m = counterexample_shift_circulant();
        let row0: Vec<f64> = (0..5).map(|k| m.get(0, k).re).collect();
        assert_eq!(row0, vec![0.0, 0.0, 1.0, 1.0, 0.0]);
        let s = eigenvalues(&m).unwrap();
        let expected = [GOLDEN_LO, GOLDEN_LO, GOLDEN_HI, GOLDEN_HI, 2.0];
        for (v, e) in s.values().iter().zip(expected.iter()) {
            assert!((v - e).abs() <= 1e-10, "got {v}, want {e}");
        }
        assert!(s.value(3) > 0.0);
    }

    #[test]
    fn shift_circulant_fails_lower_family_at_k3() {
        let m = counterexample_shift_circulant();
        let report = check_theorem2(&m, true).unwrap();
        assert!(!report.holds);
        assert_eq!(report.witness.part, "lower");
        assert_eq!(report.witness.index, 3);
        assert!((report.worst_slack + GOLDEN_HI).abs() <= 1e-9);
    }

    #[test]
    fn single_trial_outcome_is_reproducible() {
        let task = SearchTask {
            target_class: SearchClass::ClassP,
            family: Family::Lower,
            k: 1,
            n: 4,
            trials: 1,
            seed: 99,
            diag_range: DiagRange::default(),
            offdiag_max: 1.0,
            quantize: false,
        };
        let a = search_violations(&task).unwrap();
        let b = search_violations(&task).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.trials_run, 1);
    }

    #[test]
    fn imaginary_class_search_finds_nothing() {
        let task = SearchTask {
            target_class: SearchClass::ClassI,
            family: Family::Lower,
            k: 2,
            n: 6,
            trials: 500,
            seed: 7,
            diag_range: DiagRange::new(-1.0, 1.0).unwrap(),
            offdiag_max: 2.0,
            quantize: false,
        };
        let outcome = search_violations(&task).unwrap();
        assert_eq!(outcome.violations_found, 0);
        assert!(outcome.first_witness.is_none());
    }

    #[test]
    fn quantized_class_p_search_finds_a_violation() {
        let task = SearchTask {
            target_class: SearchClass::ClassP,
            family: Family::Lower,
            k: 3,
            n: 5,
            trials: 20_000,
            seed: 1,
            diag_range: DiagRange::default(),
            offdiag_max: 1.0,
            quantize: true,
        };
        let outcome = search_violations(&task).unwrap();
        assert!(outcome.violations_found > 0);
        let witness = outcome.first_witness.unwrap();
        assert!(witness.slack < 0.0);
        assert!(witness.oracle_slack < 0.0);
        // Replay the trial from the recorded stream seed.
        let mut rng = ChaCha8Rng::seed_from_u64(task.seed ^ witness.trial_index);
        let replay =
            classes::sample_class_p(task.n, &mut rng, task.diag_range, task.offdiag_max, true)
                .unwrap();
        assert_eq!(replay, witness.matrix);
    }

    #[test]
    fn invalid_tasks_are_rejected() {
        let base = SearchTask {
            target_class: SearchClass::ClassP,
            family: Family::Lower,
            k: 3,
            n: 5,
            trials: 1,
            seed: 0,
            diag_range: DiagRange::default(),
            offdiag_max: 1.0,
            quantize: false,
        };
        let mut bad_k = base.clone();
        bad_k.k = 4;
        assert!(matches!(search_violations(&bad_k), Err(Error::InvalidTask { .. })));
        let mut no_trials = base.clone();
        no_trials.trials = 0;
        assert!(matches!(search_violations(&no_trials), Err(Error::InvalidTask { .. })));
        let mut bad_n = base;
        bad_n.n = 0;
        assert!(matches!(search_violations(&bad_n), Err(Error::InvalidTask { .. })));
    }
}
