//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension must be at least {min}, got {got}")]
    InvalidDimension { got: usize, min: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix contains non-finite entries")]
    NonFiniteEntries,

    #[error("matrix is not Hermitian: defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("eigensolver did not converge within {iterations} iterations")]
    EigNonConvergence { iterations: usize },

    #[error("negative weight c[{index}] = {value}")]
    NegativeWeight { index: usize, value: f64 },

    #[error("weights must sum to 1: defect {defect:.3e} exceeds 1e-12")]
    WeightSumDefect { defect: f64 },

    #[error("{count} weights do not fit in dimension {dim}")]
    TooManyWeights { count: usize, dim: usize },

    #[error("Fock index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("squeeze parameter must be positive and finite, got {omega}")]
    InvalidSqueeze { omega: f64 },

    #[error("dimension {dim} too small: defining-relation residual {residual:.3e} exceeds {tol:.1e}")]
    InsufficientDimension { dim: usize, residual: f64, tol: f64 },

    #[error("invalid density matrix: {reason}")]
    InvalidDensity { reason: String },

    #[error("moment truncation tail: dim {dim} vs {half} differ by {defect:.3e} (tolerance {tol:.1e})")]
    TruncationTail {
        dim: usize,
        half: usize,
        defect: f64,
        tol: f64,
    },

    #[error("inconsistent moments: n2bar {n2bar} < nbar^2 = {nbar_sq}")]
    InconsistentMoments { n2bar: f64, nbar_sq: f64 },

    #[error("sigma has nonvanishing odd moments (max {max_odd:.3e}); symmetric symbol table not applicable")]
    OddMomentViolation { max_odd: f64 },

    #[error("sigma is not diagonal in the number basis (off-diagonal magnitude {offdiag:.3e})")]
    NotNumberDiagonal { offdiag: f64 },

    #[error("unsupported Hamiltonian for this operation: {0}")]
    UnsupportedHamiltonian(String),

    #[error("symbol is not integrable: {0}")]
    NonIntegrable(String),

    #[error("quadrature did not converge: relative change {err:.3e} exceeds {tol:.1e}")]
    QuadratureNonConvergence { err: f64, tol: f64 },

    #[error("beta must be positive and finite, got {0}")]
    InvalidBeta(f64),

    #[error("beta grid must be strictly increasing and positive")]
    InvalidBetaGrid,

    #[error("spectral tail certificate failed at beta={beta}: relative tail {tail:.3e} exceeds 1e-12 (dim {dim})")]
    TailCertificate { beta: f64, tail: f64, dim: usize },

    #[error("bound sandwich violated at beta={beta}: ln lower={ln_lower:.9e}, ln Z={ln_z:.9e}, ln upper={ln_upper:.9e}")]
    SandwichViolation {
        beta: f64,
        ln_lower: f64,
        ln_z: f64,
        ln_upper: f64,
    },

    #[error("probe beta {beta} too small: gap certificate {cert:.3e} exceeds 1e-6")]
    ProbeTooSmall { beta: f64, cert: f64 },

    #[error("value overflowed f64 range in {0}")]
    ValueOverflow(String),

    #[error("sigma family has an empty parameter range")]
    EmptyFamily,

    #[error("sigma family incompatible with this bound: {0}")]
    IncompatibleFamily(String),

    #[error("config error: {0}")]
    Config(String),
}
