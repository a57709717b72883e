use thiserror::Error;

use crate::config::Stepper;

/// Errors produced by configuration validation, the solvers, and the
/// validation oracles.
#[derive(Debug, Error)]
pub enum TwError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A time step failed (singular implicit system or non-finite state);
    /// carries the x position at which the march broke down.
    #[error("solver failure at x = {x}: {reason}")]
    SolverFailure { x: f64, reason: String },

    /// The requested Δx lies inside the stepper's known instability window
    /// for the spectral discretization and no override was given.
    #[error(
        "dx = {dx} lies inside the {stepper:?} instability window \
         [{lo}, {hi}] for the spectral discretization; pass force=true to run anyway"
    )]
    StabilityRefusal {
        stepper: Stepper,
        dx: f64,
        lo: f64,
        hi: f64,
    },

    /// The reference oracle failed its own convergence check; results must
    /// not be trusted, so the caller should halt instead of comparing.
    #[error("oracle failure: {0}")]
    OracleFailure(String),

    #[error("eigenvalue computation failed: {0}")]
    Eigen(String),

    #[error("airy function pole: Ai({0}) = 0")]
    AiryPole(f64),

    #[error("non-uniform grid: {0}")]
    NonUniformGrid(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, TwError>;

impl TwError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        TwError::InvalidParameter(msg.into())
    }
}
