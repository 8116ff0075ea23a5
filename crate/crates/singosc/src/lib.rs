//! Time-dependent singular oscillator for two-ion relative motion in a trap:
//! classical mode dynamics, exact and large-d asymptotic state densities, and
//! energy-level transition probabilities under frequency variation.

pub mod error;
pub mod figures;
pub mod mode;
pub mod specfun;
pub mod states;
pub mod transitions;
pub mod trap;

pub use error::{Error, Result};

/// Library crate version, recorded in output manifests.
pub fn version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}
