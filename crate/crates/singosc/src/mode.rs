//! Classical mode equation ε̈ + ω²(t)ε = 0 under the Wronskian normalization
//! ε̇ε* − ε̇*ε = 2i: frequency profiles, adaptive Dormand-Prince integration,
//! the closed-form parametric-resonance mode, and Bogoliubov extraction.
//!
//! Dimensionless units throughout; time is scaled so a typical ω is near 1.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Natural cubic spline through (x, y) knots, constant outside the range.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    second: Vec<f64>,
}

impl CubicSpline {
    fn natural(xs: &[f64], ys: &[f64]) -> CubicSpline {
        let n = xs.len();
        let mut second = vec![0.0; n];
        let mut u = vec![0.0; n];
        for i in 1..n - 1 {
            let sig = (xs[i] - xs[i - 1]) / (xs[i + 1] - xs[i - 1]);
            let p = sig * second[i - 1] + 2.0;
            second[i] = (sig - 1.0) / p;
            let slope_hi = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
            let slope_lo = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
            u[i] = (6.0 * (slope_hi - slope_lo) / (xs[i + 1] - xs[i - 1]) - sig * u[i - 1]) / p;
        }
        for k in (1..n - 1).rev() {
            second[k] = second[k] * second[k + 1] + u[k];
        }
        CubicSpline {
            xs: xs.to_vec(),
            ys: ys.to_vec(),
            second,
        }
    }

    fn eval(&self, t: f64) -> f64 {
        let n = self.xs.len();
        if t <= self.xs[0] {
            return self.ys[0];
        }
        if t >= self.xs[n - 1] {
            return self.ys[n - 1];
        }
        let hi = self.xs.partition_point(|&x| x < t).min(n - 1);
        let lo = hi - 1;
        let h = self.xs[hi] - self.xs[lo];
        let a = (self.xs[hi] - t) / h;
        let b = (t - self.xs[lo]) / h;
        a * self.ys[lo]
            + b * self.ys[hi]
            + ((a * a * a - a) * self.second[lo] + (b * b * b - b) * self.second[hi]) * h * h
                / 6.0
    }
}

/// Time dependence of ω²(t).
#[derive(Debug, Clone)]
pub enum FrequencyProfile {
    /// ω constant in time.
    Constant { omega: f64 },
    /// ω²(t) interpolated through a table by a natural cubic spline,
    /// constant outside the tabulated range.
    Tabulated {
        times: Vec<f64>,
        omega_sq: Vec<f64>,
        spline: CubicSpline,
    },
    /// ω²(t) = (1 + k·cos 2t)/(1 + k), the parametric resonance drive.
    ParametricResonance { k: f64 },
}

impl FrequencyProfile {
    pub fn constant(omega: f64) -> Result<Self> {
        if !(omega > 0.0) {
            return Err(Error::Domain(format!(
                "constant profile requires omega > 0, got {omega}"
            )));
        }
        Ok(FrequencyProfile::Constant { omega })
    }

    pub fn tabulated(times: Vec<f64>, omega_sq: Vec<f64>) -> Result<Self> {
        if times.len() != omega_sq.len() {
            return Err(Error::Domain(format!(
                "table lengths differ: {} times, {} omega_sq",
                times.len(),
                omega_sq.len()
            )));
        }
        if times.len() < 2 {
            return Err(Error::Domain("table needs at least 2 knots".into()));
        }
        if !times.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Domain("times must be strictly increasing".into()));
        }
        if !(omega_sq[0] > 0.0 && omega_sq[omega_sq.len() - 1] > 0.0) {
            return Err(Error::Domain(
                "endpoint omega_sq must be positive to define omega_i and omega_f".into(),
            ));
        }
        let spline = CubicSpline::natural(&times, &omega_sq);
        Ok(FrequencyProfile::Tabulated {
            times,
            omega_sq,
            spline,
        })
    }

    pub fn parametric_resonance(k: f64) -> Result<Self> {
        if !(k.abs() < 1.0) {
            return Err(Error::Domain(format!(
                "parametric resonance requires |k| < 1, got {k}"
            )));
        }
        Ok(FrequencyProfile::ParametricResonance { k })
    }

    /// Smooth monotone ramp of ω² from ω_i² to ω_f² over [t0, t0+duration],
    /// tabulated from the quintic smootherstep 6s⁵−15s⁴+10s³ (zero first and
    /// second derivatives at both junctions, matching the natural-spline ends).
    pub fn smooth_ramp(
        omega_i: f64,
        omega_f: f64,
        t0: f64,
        duration: f64,
        samples: usize,
    ) -> Result<Self> {
        if !(omega_i > 0.0 && omega_f > 0.0) {
            return Err(Error::Domain("ramp frequencies must be positive".into()));
        }
        if !(duration > 0.0) {
            return Err(Error::Domain(format!(
                "ramp duration must be positive, got {duration}"
            )));
        }
        if samples < 8 {
            return Err(Error::Domain(format!(
                "ramp needs at least 8 samples, got {samples}"
            )));
        }
        let wi2 = omega_i * omega_i;
        let wf2 = omega_f * omega_f;
        let mut times = Vec::with_capacity(samples);
        let mut omega_sq = Vec::with_capacity(samples);
        for j in 0..samples {
            let s = j as f64 / (samples - 1) as f64;
            let smooth = s * s * s * (6.0 * s * s - 15.0 * s + 10.0);
            times.push(t0 + duration * s);
            omega_sq.push(wi2 + (wf2 - wi2) * smooth);
        }
        Self::tabulated(times, omega_sq)
    }

    /// ω²(t).
    pub fn omega_sq_at(&self, t: f64) -> f64 {
        match self {
            FrequencyProfile::Constant { omega } => omega * omega,
            FrequencyProfile::Tabulated { spline, .. } => spline.eval(t),
            FrequencyProfile::ParametricResonance { k } => {
                (1.0 + k * (2.0 * t).cos()) / (1.0 + k)
            }
        }
    }

    /// Asymptotic initial frequency.
    pub fn omega_i(&self) -> f64 {
        match self {
            FrequencyProfile::Constant { omega } => *omega,
            FrequencyProfile::Tabulated { omega_sq, .. } => omega_sq[0].sqrt(),
            FrequencyProfile::ParametricResonance { .. } => 1.0,
        }
    }

    /// Asymptotic final frequency.
    pub fn omega_f(&self) -> f64 {
        match self {
            FrequencyProfile::Constant { omega } => *omega,
            FrequencyProfile::Tabulated { omega_sq, .. } => omega_sq[omega_sq.len() - 1].sqrt(),
            FrequencyProfile::ParametricResonance { .. } => 1.0,
        }
    }
}

/// The complex mode and its derivative at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeState {
    pub t: f64,
    pub eps: Complex64,
    pub eps_dot: Complex64,
}

impl ModeState {
    /// Wronskian ε̇ε* − ε̇*ε; exactly 2i for the normalized mode.
    pub fn wronskian(&self) -> Complex64 {
        self.eps_dot * self.eps.conj() - self.eps_dot.conj() * self.eps
    }

    /// |W − 2i|, the normalization drift accumulated by integration error.
    pub fn wronskian_drift(&self) -> f64 {
        (self.wronskian() - Complex64::new(0.0, 2.0)).norm()
    }

    /// |ε|².
    pub fn eps_abs_sq(&self) -> f64 {
        self.eps.norm_sqr()
    }
}

/// Unexcited mode ε = ω^{−1/2} e^{iωt} at time t0; Wronskian exactly 2i.
pub fn initial_mode(omega_i: f64, t0: f64) -> ModeState {
    assert!(omega_i > 0.0, "omega_i must be positive, got {omega_i}");
    let phase = Complex64::from_polar(1.0, omega_i * t0);
    ModeState {
        t: t0,
        eps: phase / omega_i.sqrt(),
        eps_dot: Complex64::i() * omega_i.sqrt() * phase,
    }
}

/// Closed-form parametric-resonance mode for the drive ω² = (1+k·cos2t)/(1+k):
/// ε = cosh(kt/4) e^{it} − i sinh(kt/4) e^{−it}, with its exact derivative.
pub fn resonance_mode(k: f64, t: f64) -> ModeState {
    assert!(k.abs() <= 0.1, "closed form valid for |k| <= 0.1, got {k}");
    let kappa = k / 4.0;
    let c = (kappa * t).cosh();
    let s = (kappa * t).sinh();
    let ep = Complex64::from_polar(1.0, t);
    let em = Complex64::from_polar(1.0, -t);
    let i = Complex64::i();
    ModeState {
        t,
        eps: c * ep - i * s * em,
        eps_dot: (kappa * s + i * c) * ep - (s + i * kappa * c) * em,
    }
}

/// Mode state at time t for any profile: closed forms where they exist,
/// numerical integration from the profile's natural start otherwise.
pub fn mode_at(profile: &FrequencyProfile, t: f64, rel_tol: f64) -> Result<ModeState> {
    match profile {
        FrequencyProfile::Constant { omega } => Ok(initial_mode(*omega, t)),
        FrequencyProfile::ParametricResonance { k } if k.abs() <= 0.1 => Ok(resonance_mode(*k, t)),
        _ => {
            let t0 = match profile {
                FrequencyProfile::Tabulated { times, .. } => times[0],
                _ => 0.0,
            };
            let start = initial_mode(profile.omega_i(), t0);
            let traj = integrate_from(profile, start, t, rel_tol)?;
            Ok(*traj.states.last().expect("trajectory holds the start state"))
        }
    }
}

/// Integrated mode trajectory with its accuracy diagnostic.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub states: Vec<ModeState>,
    /// max |W − 2i| over the returned states.
    pub max_wronskian_drift: f64,
}

/// Dormand-Prince 5(4) coefficients.
const A2: [f64; 1] = [1.0 / 5.0];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
const B: [f64; 6] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
const C: [f64; 5] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0];

type Y = [f64; 4];

fn deriv(profile: &FrequencyProfile, t: f64, y: &Y) -> Y {
    let w2 = profile.omega_sq_at(t);
    [y[2], y[3], -w2 * y[0], -w2 * y[1]]
}

fn axpy(y: &Y, h: f64, coeffs: &[f64], ks: &[Y]) -> Y {
    let mut out = *y;
    for (c, k) in coeffs.iter().zip(ks) {
        for i in 0..4 {
            out[i] += h * c * k[i];
        }
    }
    out
}

fn state_from(t: f64, y: &Y) -> ModeState {
    ModeState {
        t,
        eps: Complex64::new(y[0], y[1]),
        eps_dot: Complex64::new(y[2], y[3]),
    }
}

/// Integrate the mode equation from t0 to t1 > t0, starting unexcited at
/// the profile's ω_i. Returns the adaptive-step trajectory including both
/// endpoints. rel_tol must lie in [1e-13, 1e-6].
pub fn integrate_mode(
    profile: &FrequencyProfile,
    t0: f64,
    t1: f64,
    rel_tol: f64,
) -> Result<Trajectory> {
    if !(t1 > t0) {
        return Err(Error::Domain(format!(
            "integration requires t1 > t0, got [{t0}, {t1}]"
        )));
    }
    integrate_from(profile, initial_mode(profile.omega_i(), t0), t1, rel_tol)
}

/// Integrate from an arbitrary starting state to t1 (either direction).
pub fn integrate_from(
    profile: &FrequencyProfile,
    start: ModeState,
    t1: f64,
    rel_tol: f64,
) -> Result<Trajectory> {
    if !(1e-13..=1e-6).contains(&rel_tol) {
        return Err(Error::Domain(format!(
            "rel_tol {rel_tol} outside [1e-13, 1e-6]"
        )));
    }
    let t0 = start.t;
    if t1 == t0 {
        return Ok(Trajectory {
            max_wronskian_drift: start.wronskian_drift(),
            states: vec![start],
        });
    }
    let atol = rel_tol;
    let span = t1 - t0;
    let dir = span.signum();
    let h_min = 1e-14 * span.abs().max(1.0);

    let mut t = t0;
    let mut y: Y = [
        start.eps.re,
        start.eps.im,
        start.eps_dot.re,
        start.eps_dot.im,
    ];
    let mut h = dir * 0.01 / profile.omega_sq_at(t0).abs().sqrt().max(1.0);
    let mut k1 = deriv(profile, t, &y);
    let mut states = vec![start];
    let mut max_drift = start.wronskian_drift();

    while (t1 - t) * dir > 0.0 {
        if h.abs() > (t1 - t).abs() {
            h = t1 - t;
        }
        let k2 = deriv(profile, t + C[0] * h, &axpy(&y, h, &A2, &[k1]));
        let k3 = deriv(profile, t + C[1] * h, &axpy(&y, h, &A3, &[k1, k2]));
        let k4 = deriv(profile, t + C[2] * h, &axpy(&y, h, &A4, &[k1, k2, k3]));
        let k5 = deriv(profile, t + C[3] * h, &axpy(&y, h, &A5, &[k1, k2, k3, k4]));
        let k6 = deriv(
            profile,
            t + C[4] * h,
            &axpy(&y, h, &A6, &[k1, k2, k3, k4, k5]),
        );
        let y_new = axpy(&y, h, &B, &[k1, k2, k3, k4, k5, k6]);
        let k7 = deriv(profile, t + h, &y_new);

        let ks = [k1, k2, k3, k4, k5, k6, k7];
        let mut err_sq = 0.0;
        for i in 0..4 {
            let mut e = 0.0;
            for (c, k) in E.iter().zip(&ks) {
                e += c * k[i];
            }
            e *= h;
            let sc = atol + rel_tol * y[i].abs().max(y_new[i].abs());
            err_sq += (e / sc) * (e / sc);
        }
        let err = (err_sq / 4.0).sqrt();

        if err <= 1.0 && err.is_finite() {
            t += h;
            y = y_new;
            k1 = k7;
            let st = state_from(t, &y);
            max_drift = max_drift.max(st.wronskian_drift());
            states.push(st);
        }
        let factor = if err.is_finite() && err > 0.0 {
            0.9 * err.powf(-0.2)
        } else if err == 0.0 {
            5.0
        } else {
            0.2
        };
        h *= factor.clamp(0.2, 5.0);
        if h.abs() < h_min {
            return Err(Error::StepSizeUnderflow { t });
        }
    }
    Ok(Trajectory {
        states,
        max_wronskian_drift: max_drift,
    })
}

/// Bogoliubov coefficients of ε(t→∞) = ω_f^{−1/2}[ξ e^{iω_f t} − η e^{−iω_f t}].
#[derive(Debug, Clone, Copy)]
pub struct BogoliubovPair {
    pub xi: Complex64,
    pub eta: Complex64,
}

/// Invert the two-term asymptotic form at a settled final state.
///
/// Errors with [`Error::NotSettled`] if |ξ|²−|η|² deviates from 1 by more
/// than 1e-6, which happens exactly when the trajectory's Wronskian was
/// corrupted (the defect equals |Im(ε̇ε*) − 1|).
pub fn bogoliubov(last: &ModeState, omega_f: f64) -> Result<BogoliubovPair> {
    if !(omega_f > 0.0) {
        return Err(Error::Domain(format!(
            "omega_f must be positive, got {omega_f}"
        )));
    }
    let root = omega_f.sqrt();
    let phase = Complex64::from_polar(1.0, omega_f * last.t);
    let i = Complex64::i();
    let xi = (root * last.eps - i * last.eps_dot / root) / (2.0 * phase);
    let eta = -phase * (root * last.eps + i * last.eps_dot / root) / 2.0;
    let defect = (xi.norm_sqr() - eta.norm_sqr() - 1.0).abs();
    if defect > 1e-6 {
        return Err(Error::NotSettled { defect });
    }
    Ok(BogoliubovPair { xi, eta })
}

/// Reflection coefficient r = |η/ξ|² ∈ [0, 1).
pub fn reflection_coefficient(pair: &BogoliubovPair) -> f64 {
    assert!(pair.xi.norm() > 0.0, "xi must be nonzero");
    pair.eta.norm_sqr() / pair.xi.norm_sqr()
}
