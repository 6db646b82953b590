//! Crate-wide error type.

/// Errors produced by the solvers, estimators and I/O helpers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    /// The requested transverse mode does not propagate at this energy.
    #[error(
        "evanescent mode: |energy| = {energy_ev:.6} eV is at or below the band edge \
         {band_edge_ev:.6} eV of the selected transverse mode"
    )]
    EvanescentMode { energy_ev: f64, band_edge_ev: f64 },

    #[error("energy must be nonzero")]
    ZeroEnergy,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("spinor or state must have unit norm, got |psi|^2 = {norm_sq}")]
    NotNormalized { norm_sq: f64 },

    #[error("linear system is numerically singular (pivot-ratio condition estimate {cond_estimate:.3e})")]
    SingularSystem { cond_estimate: f64 },

    #[error("root bracket [{lo}, {hi}] does not straddle a sign change")]
    BracketFailure { lo: f64, hi: f64 },

    #[error("transmission probability is zero; the conditioned state is not normalizable")]
    NonNormalizable,

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to:
    /// 2 = input error, 3 = I/O error, 4 = numeric failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidGeometry(_)
            | Error::EvanescentMode { .. }
            | Error::ZeroEnergy
            | Error::InvalidInput(_)
            | Error::NotNormalized { .. } => 2,
            Error::Io(_) => 3,
            Error::SingularSystem { .. }
            | Error::BracketFailure { .. }
            | Error::NonNormalizable
            | Error::Numeric(_) => 4,
        }
    }
}
