use std::fmt;

/// Errors produced by matrix construction, eigensolvers and checkers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input array is empty or not n-by-n.
    NotSquare { rows: usize, cols: usize },
    /// Asymmetry above the construction tolerance.
    NotHermitian { max_asymmetry: f64, tolerance: f64 },
    /// A NaN or infinite component was found at (row, col).
    NonFiniteEntry { row: usize, col: usize },
    /// The Jacobi sweep limit was exceeded before the off-diagonal norm
    /// dropped below threshold.
    ConvergenceFailure { sweeps: usize, off_norm: f64 },
    /// The bisection oracle only supports orders up to its stated cap.
    OrderTooLarge { n: usize, max: usize },
    /// Operation needs a larger matrix (e.g. a 3x3 block).
    OrderTooSmall { n: usize, min: usize },
    /// Submatrix or comparison index outside 1..=n.
    IndexOutOfRange { index: usize, n: usize },
    /// Repeated index in a principal-submatrix selection.
    DuplicateIndex { index: usize },
    /// Two-matrix operation called with mismatched orders.
    OrderMismatch { left: usize, right: usize },
    /// The matrix is not in a class the check applies to (pass `force`
    /// to evaluate anyway and record the verdict as data).
    ClassNotApplicable { check: &'static str },
    /// certify on a matrix whose zero-diagonal 3x3 block has negative
    /// determinant beyond tolerance.
    HypothesisViolated { det_m3: f64, tolerance: f64 },
    /// Pairing check requires an exactly zero diagonal.
    NotZeroDiagonal { index: usize, value: f64 },
    /// Random generator range is empty or not finite.
    InvalidRange { what: &'static str },
    /// Search task fails its own invariants (k too large, zero trials, ...).
    InvalidTask { reason: String },
    /// Graph edge connects a vertex to itself.
    SelfLoop { vertex: usize },
    /// Same unordered vertex pair listed twice.
    DuplicateEdge { u: usize, v: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare { rows, cols } => {
                write!(f, "input is not square: {rows} rows, {cols} columns")
            }
            Error::NotHermitian { max_asymmetry, tolerance } => write!(
                f,
                "input is not Hermitian: max |a_jk - conj(a_kj)| = {max_asymmetry:e} exceeds {tolerance:e}"
            ),
            Error::NonFiniteEntry { row, col } => {
                write!(f, "non-finite entry at ({row}, {col})")
            }
            Error::ConvergenceFailure { sweeps, off_norm } => write!(
                f,
                "eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
            ),
            Error::OrderTooLarge { n, max } => {
                write!(f, "order {n} exceeds the oracle cap of {max}")
            }
            Error::OrderTooSmall { n, min } => {
                write!(f, "order {n} is below the required minimum {min}")
            }
            Error::IndexOutOfRange { index, n } => {
                write!(f, "index {index} out of range for order {n}")
            }
            Error::DuplicateIndex { index } => write!(f, "duplicate index {index}"),
            Error::OrderMismatch { left, right } => {
                write!(f, "order mismatch: {left} vs {right}")
            }
            Error::ClassNotApplicable { check } => write!(
                f,
                "matrix is not in a class the `{check}` check applies to (use force to evaluate anyway)"
            ),
            Error::HypothesisViolated { det_m3, tolerance } => write!(
                f,
                "hypothesis violated: det of the zero-diagonal 3x3 block is {det_m3:e} < -{tolerance:e}"
            ),
            Error::NotZeroDiagonal { index, value } => {
                write!(f, "diagonal entry {index} is {value:e}, expected zero")
            }
            Error::InvalidRange { what } => write!(f, "invalid range: {what}"),
            Error::InvalidTask { reason } => write!(f, "invalid search task: {reason}"),
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
