use thiserror::Error;

/// Errors produced by the solver library.
///
/// Variants are grouped by origin: input validation (`InvalidModel`,
/// `Config`, `Domain`, `NotSubcritical`, `UnsupportedRegime`) versus
/// numerical failure during a run (`SingularMatrix`, `IterationFailure`,
/// `NormalizationFailure`, `DegenerateContour`, `AmbiguousEigenvalue`,
/// `NumericalDegeneracy`, `Analysis`).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("model is not subcritical: {0}")]
    NotSubcritical(String),

    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    #[error("analysis error: {0}")]
    Analysis(String),

    #[error("matrix is numerically singular (pivot {pivot:.3e})")]
    SingularMatrix { pivot: f64 },

    #[error("eigenvalue iteration failed to converge after {iterations} iterations (last residual {last_residual:.3e})")]
    IterationFailure {
        iterations: usize,
        last_residual: f64,
    },

    #[error("normalization failure: {0}")]
    NormalizationFailure(String),

    #[error("degenerate contour: {0}")]
    DegenerateContour(String),

    #[error("ambiguous smallest eigenvalue: reduced eigenvalue magnitude {magnitude:.3e} is not separated from the shift {shift:.3e}")]
    AmbiguousEigenvalue { magnitude: f64, shift: f64 },

    #[error("numerical degeneracy: {0}")]
    NumericalDegeneracy(String),
}

impl Error {
    /// True when the error stems from rejected input rather than a
    /// numerical failure mid-computation. The CLI maps this to exit code 2
    /// versus 3.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidModel(_)
                | Error::Config(_)
                | Error::Domain(_)
                | Error::NotSubcritical(_)
                | Error::UnsupportedRegime(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
