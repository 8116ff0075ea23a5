//! Deterministic datasets behind the six reference figures: two density
//! surfaces |Ψ_n(x,t)|² under parametric resonance, an rd sweep of large-d
//! transition probabilities, and three exact transition matrices at fixed
//! reflection coefficients.

use crate::error::{Error, Result};
use crate::mode::resonance_mode;
use crate::states::psi_n_density_asymptotic;
use crate::transitions::{transition_matrix, w_large_d, Regime, TransitionMatrix};

pub const SURFACE_D: f64 = 1e5;
pub const SURFACE_K: f64 = 0.02;
pub const SURFACE_T_MAX: f64 = 40.0;
pub const SURFACE_TIME_SAMPLES: usize = 81;
pub const SURFACE_X_SAMPLES: usize = 201;
/// The x grid covers ⟨x²⟩ ± this many standard deviations of x².
pub const SURFACE_SIGMA_SPAN: f64 = 6.0;

pub const SWEEP_ROW: u32 = 5;
pub const SWEEP_COLUMNS: [u32; 4] = [0, 2, 5, 10];
pub const SWEEP_RD_MAX: f64 = 20.0;
pub const SWEEP_STEPS_PER_UNIT: u32 = 20;

pub const MATRIX_D: f64 = 1e5;
pub const MATRIX_SIZE: usize = 30;
pub const MATRIX_REFLECTIONS: [f64; 3] = [1e-6, 1e-5, 1e-4];

/// One sample of a density surface in long form.
#[derive(Debug, Clone, Copy)]
pub struct SurfacePoint {
    pub t: f64,
    pub x: f64,
    pub density: f64,
}

/// |Ψ_n(x,t)|² on the resonance mode, sampled on a per-time x grid that
/// tracks the spreading state: at each of the uniformly spaced times the
/// 201 x points span x² = ⟨x²⟩ ± 6σ with ⟨x²⟩ = |ε|²(2n+d+1) and
/// σ = |ε|²√(d(2n+1)).
pub fn density_surface(n: u32, d: f64, k: f64) -> Result<Vec<SurfacePoint>> {
    if !(k.abs() <= 0.1) {
        return Err(Error::Domain(format!(
            "surface uses the closed resonance mode, valid for |k| <= 0.1, got {k}"
        )));
    }
    let mut points = Vec::with_capacity(SURFACE_TIME_SAMPLES * SURFACE_X_SAMPLES);
    for j in 0..SURFACE_TIME_SAMPLES {
        let t = SURFACE_T_MAX * j as f64 / (SURFACE_TIME_SAMPLES - 1) as f64;
        let mode = resonance_mode(k, t);
        let eps2 = mode.eps_abs_sq();
        let mean = eps2 * (2.0 * n as f64 + d + 1.0);
        let sigma = eps2 * (d * (2.0 * n as f64 + 1.0)).sqrt();
        let lo = mean - SURFACE_SIGMA_SPAN * sigma;
        if lo <= 0.0 {
            return Err(Error::Domain(format!(
                "x^2 window extends below 0 at t={t}; need smaller n or larger d"
            )));
        }
        for i in 0..SURFACE_X_SAMPLES {
            let frac = i as f64 / (SURFACE_X_SAMPLES - 1) as f64;
            let x = (lo + 2.0 * SURFACE_SIGMA_SPAN * sigma * frac).sqrt();
            let density = psi_n_density_asymptotic(n, d, &mode, x)?;
            points.push(SurfacePoint { t, x, density });
        }
    }
    Ok(points)
}

/// W_5^m(rd) for m ∈ {0, 2, 5, 10} over rd ∈ [0, 20] in steps of 1/20.
pub fn large_d_sweep() -> Result<Vec<(f64, [f64; 4])>> {
    let steps = (SWEEP_RD_MAX * SWEEP_STEPS_PER_UNIT as f64) as u32;
    let mut rows = Vec::with_capacity(steps as usize + 1);
    for j in 0..=steps {
        let rd = j as f64 / SWEEP_STEPS_PER_UNIT as f64;
        let mut w = [0.0; 4];
        for (slot, &m) in w.iter_mut().zip(SWEEP_COLUMNS.iter()) {
            *slot = w_large_d(SWEEP_ROW, m, rd)?;
        }
        rows.push((rd, w));
    }
    Ok(rows)
}

/// 30×30 exact transition matrix at d = 1e5 for one of the figure
/// reflection coefficients.
pub fn reflection_matrix(r: f64) -> Result<TransitionMatrix> {
    transition_matrix(MATRIX_D, r, MATRIX_SIZE, MATRIX_SIZE, Regime::ExactJacobi)
}
