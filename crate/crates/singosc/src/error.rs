//! Error type shared by every module in the crate.

use thiserror::Error;

/// Failure modes of the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Requested d falls in the gap between the exact and asymptotic branches.
    #[error("d = {d} falls between the exact branch (d <= {exact_max}) and the asymptotic branch (d >= {asymptotic_min}); no validated evaluation exists there")]
    RegimeGap {
        d: f64,
        exact_max: f64,
        asymptotic_min: f64,
    },

    /// Adaptive integrator could not advance; the profile is too stiff or discontinuous.
    #[error("step size underflow at t = {t}; frequency profile too stiff for the integrator")]
    StepSizeUnderflow { t: f64 },

    /// Bogoliubov extraction at a time where the profile had not settled.
    #[error("mode not settled: |xi|^2 - |eta|^2 deviates from 1 by {defect:.3e} (tolerance 1e-6)")]
    NotSettled { defect: f64 },

    /// First-order adiabatic formula used outside its validity range.
    #[error("adiabatic formula invalid: r*(2mn + (d+1)(m+n+1)) = {term:.3e} exceeds 0.1")]
    AdiabaticPrecondition { term: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
