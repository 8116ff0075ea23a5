//! Quantum state probability densities for the singular oscillator in
//! dimensionless units ħ = μ = 1: exact number-state, coherent-like α-state,
//! and power-Gaussian z-state densities, their large-d asymptotic forms, and
//! the second-moment formulas driven by the classical mode.
//!
//! All densities live on the half line x ∈ (0, ∞) and are normalized there.

use crate::error::{Error, Result};
use crate::mode::ModeState;
use crate::specfun::{hermite_log, laguerre_log, log_gamma};
use num_complex::Complex64;

const ALPHA_EXACT_MAX_D: f64 = 50.0;
const ASYMPTOTIC_MIN_D: f64 = 1e3;
const MAX_LEVEL: u32 = 10_000;

/// Which state a density grid describes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateKind {
    NumberState(u32),
    AlphaState(Complex64),
    ZState(Complex64),
}

/// A state of the singular oscillator with level parameter d > 1/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateSpec {
    pub kind: StateKind,
    pub d: f64,
}

impl StateSpec {
    pub fn new(kind: StateKind, d: f64) -> Result<Self> {
        if !(d > 0.5) {
            return Err(Error::Domain(format!("d must exceed 1/2, got {d}")));
        }
        match kind {
            StateKind::NumberState(n) if n > MAX_LEVEL => {
                return Err(Error::Domain(format!("n = {n} exceeds {MAX_LEVEL}")));
            }
            StateKind::ZState(z) if z.norm() >= 1.0 => {
                return Err(Error::Domain(format!("|z| = {} must be < 1", z.norm())));
            }
            _ => {}
        }
        Ok(StateSpec { kind, d })
    }
}

/// Branch used to evaluate a density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityRegime {
    Exact,
    Asymptotic,
}

/// A density sampled on a sorted positive grid at one mode time.
#[derive(Debug, Clone)]
pub struct DensityGrid {
    pub x: Vec<f64>,
    pub density: Vec<f64>,
    pub regime: DensityRegime,
    pub mode_time: f64,
}

impl DensityGrid {
    /// Trapezoid integral over the grid; near 1 when the grid covers the support.
    pub fn trapezoid(&self) -> f64 {
        let mut total = 0.0;
        for i in 1..self.x.len() {
            total += 0.5 * (self.density[i] + self.density[i - 1]) * (self.x[i] - self.x[i - 1]);
        }
        total
    }
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("density needs x > 0, got {x}")));
    }
    Ok(())
}

fn check_d(d: f64) -> Result<()> {
    if !(d > 0.5) {
        return Err(Error::Domain(format!("d must exceed 1/2, got {d}")));
    }
    Ok(())
}

/// |Ψ_n(x,t)|² = 2 n!/Γ(d+n+1) · |ε|^{−2(d+1)} x^{2d+1} e^{−x²/|ε|²}
/// [L_n^d(x²/|ε|²)]², assembled in log domain.
pub fn psi_n_density(n: u32, d: f64, mode: &ModeState, x: f64) -> Result<f64> {
    check_d(d)?;
    check_x(x)?;
    assert!(n <= MAX_LEVEL, "n = {n} exceeds {MAX_LEVEL}");
    let eps2 = mode.eps_abs_sq();
    let u = x * x / eps2;
    let lag = laguerre_log(n, d, u);
    if lag.sign == 0 {
        return Ok(0.0);
    }
    let log_density = std::f64::consts::LN_2
        + log_gamma(n as f64 + 1.0)?
        - log_gamma(d + n as f64 + 1.0)?
        - (d + 1.0) * eps2.ln()
        + (2.0 * d + 1.0) * x.ln()
        - u
        + 2.0 * lag.log_magnitude;
    Ok(log_density.exp())
}

/// Complex number-state wavefunction Ψ_n(x,t), exact branch. The density is
/// its squared modulus; the phases matter only for overlap integrals.
pub fn psi_n_wavefunction(n: u32, d: f64, mode: &ModeState, x: f64) -> Result<Complex64> {
    check_d(d)?;
    check_x(x)?;
    assert!(n <= MAX_LEVEL, "n = {n} exceeds {MAX_LEVEL}");
    let eps = mode.eps;
    let eps2 = eps.norm_sqr();
    let u = x * x / eps2;
    let lag = laguerre_log(n, d, u);
    if lag.sign == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let log_norm = 0.5
        * (std::f64::consts::LN_2 + log_gamma(n as f64 + 1.0)? - log_gamma(d + n as f64 + 1.0)?);
    let log_mag = log_norm + (d + 0.5) * x.ln() - (d + 1.0) * 0.5 * eps2.ln()
        + lag.log_magnitude;
    // phases: ε^{−(d+1)} → e^{−i(d+1)arg ε} (modulus already counted),
    // (ε*/ε)^n = e^{−2in·arg ε}, and the quadratic exp(ix²ε̇/(2ε))
    let arg_eps = eps.arg();
    let quad = Complex64::i() * x * x * mode.eps_dot / (2.0 * eps);
    let phase = -(d + 1.0) * arg_eps - 2.0 * n as f64 * arg_eps + quad.im;
    // Re(i x² ε̇/(2ε)) contributes the e^{−x²/(2|ε|²)} half of the modulus
    let magnitude = (log_mag + quad.re).exp();
    Ok(lag.sign as f64 * Complex64::from_polar(magnitude, phase))
}

/// Large-d Hermite asymptotic of |Ψ_n|² in y = x² − |ε|²(d+1):
/// (2πd)^{−1/2} (2x/(|ε|² 2ⁿ n!)) exp(−y²/(2|ε|⁴d)) [H_n(−y/(√(2d)|ε|²))]².
pub fn psi_n_density_asymptotic(n: u32, d: f64, mode: &ModeState, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(d >= ASYMPTOTIC_MIN_D) {
        return Err(Error::Domain(format!(
            "asymptotic density needs d >= {ASYMPTOTIC_MIN_D}, got {d}"
        )));
    }
    assert!(n <= MAX_LEVEL, "n = {n} exceeds {MAX_LEVEL}");
    let eps2 = mode.eps_abs_sq();
    let y = x * x - eps2 * (d + 1.0);
    let herm = hermite_log(n, -y / ((2.0 * d).sqrt() * eps2));
    if herm.sign == 0 {
        return Ok(0.0);
    }
    let log_density = std::f64::consts::LN_2 + x.ln()
        - 0.5 * (2.0 * std::f64::consts::PI * d).ln()
        - eps2.ln()
        - n as f64 * std::f64::consts::LN_2
        - log_gamma(n as f64 + 1.0)?
        - y * y / (2.0 * eps2 * eps2 * d)
        + 2.0 * herm.log_magnitude;
    Ok(log_density.exp())
}

/// Σ_k (u²/4)^k / (k! (d+1)_k), the entire series normalizing the α-state.
fn bessel_series_s(d: f64, u: f64) -> f64 {
    let q = u * u / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0.0;
    while term > 1e-18 * sum {
        term *= q / ((k + 1.0) * (d + 1.0 + k));
        sum += term;
        k += 1.0;
        if k > 1e6 {
            break;
        }
    }
    sum
}

/// Gaussian large-d density in x²: mean ⟨x²⟩, std |ε|²√d, with the 2x Jacobian.
fn gaussian_density(mean_x2: f64, eps2: f64, d: f64, x: f64) -> f64 {
    let var = eps2 * eps2 * d;
    let dev = x * x - mean_x2;
    2.0 * x / (2.0 * std::f64::consts::PI * var).sqrt() * (-dev * dev / (2.0 * var)).exp()
}

/// α-state density. Exact branch (d ≤ 50) sums the number-state expansion
/// with scaled Laguerre terms T_k = Γ(d+1) L_k^d(u)/Γ(d+k+1) against weights
/// wᵏ, w = α²ε*/(2ε), truncating below 1e-16 of the running sum; the large-d
/// branch (d ≥ 10³) is the Gaussian with the α-state mean of x². The gap in
/// between is rejected.
pub fn alpha_state_density(alpha: Complex64, d: f64, mode: &ModeState, x: f64) -> Result<f64> {
    check_d(d)?;
    check_x(x)?;
    if d > ALPHA_EXACT_MAX_D && d < ASYMPTOTIC_MIN_D {
        return Err(Error::RegimeGap {
            d,
            exact_max: ALPHA_EXACT_MAX_D,
            asymptotic_min: ASYMPTOTIC_MIN_D,
        });
    }
    let eps2 = mode.eps_abs_sq();
    if d >= ASYMPTOTIC_MIN_D {
        return Ok(gaussian_density(alpha_mean_x2(alpha, d, mode)?, eps2, d, x));
    }
    let u_state = alpha.norm_sqr();
    let y = x * x / eps2;
    let w = alpha * alpha * mode.eps.conj() / (2.0 * mode.eps);

    let mut t_prev = Complex64::new(1.0, 0.0);
    let mut t_cur = Complex64::new((1.0 + d - y) / (1.0 + d), 0.0);
    let mut w_pow = w;
    let mut sum = t_prev + w_pow * t_cur;
    let mut k = 1.0;
    loop {
        let t_next = ((2.0 * k + 1.0 + d - y) * t_cur - t_prev) / ((k + 1.0) * (d + k + 1.0));
        w_pow *= w;
        let term = w_pow * t_next;
        sum += term;
        t_prev = t_cur;
        t_cur = t_next;
        k += 1.0;
        if term.norm() < 1e-16 * sum.norm() || k > 1e5 {
            break;
        }
    }
    if sum.norm() == 0.0 {
        return Ok(0.0);
    }
    let log_density = std::f64::consts::LN_2 - log_gamma(d + 1.0)?
        - bessel_series_s(d, u_state).ln()
        + (2.0 * d + 1.0) * x.ln()
        - (d + 1.0) * eps2.ln()
        - y
        + 2.0 * sum.norm().ln();
    Ok(log_density.exp())
}

/// ⟨x²⟩ in the α-state: |ε|²⟨B⟩ − Re(ε²α*²), with ⟨B⟩ from the matching
/// branch of [`mean_b_alpha`].
pub fn alpha_mean_x2(alpha: Complex64, d: f64, mode: &ModeState) -> Result<f64> {
    let b = mean_b_alpha(alpha, d)?;
    let a_dag = alpha.conj() * alpha.conj();
    Ok(moments(b, a_dag, mode).0)
}

/// z-state density |⟨x|z⟩|² = 2 x^{2d+1}/Γ(d+1) · (1−|z|²)^{d+1}
/// |ε−zε*|^{−2(d+1)} e^{−s x²}, s = Im[(ε̇−zε̇*)(ε−zε*)*]/|ε−zε*|².
pub fn z_state_density(z: Complex64, d: f64, mode: &ModeState, x: f64) -> Result<f64> {
    check_d(d)?;
    check_x(x)?;
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!("|z| = {} must be < 1", z.norm())));
    }
    let e = mode.eps - z * mode.eps.conj();
    let e_dot = mode.eps_dot - z * mode.eps_dot.conj();
    let e2 = e.norm_sqr();
    let s = (e_dot * e.conj()).im / e2;
    let log_density = std::f64::consts::LN_2 - log_gamma(d + 1.0)?
        + (2.0 * d + 1.0) * x.ln()
        + (d + 1.0) * ((1.0 - z.norm_sqr()).ln() - e2.ln())
        - s * x * x;
    Ok(log_density.exp())
}

/// ⟨x²⟩ in the z-state: (d+1)|ε−zε*|²/(1−|z|²).
pub fn z_state_mean_x2(z: Complex64, d: f64, mode: &ModeState) -> Result<f64> {
    check_d(d)?;
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!("|z| = {} must be < 1", z.norm())));
    }
    let e = mode.eps - z * mode.eps.conj();
    Ok((d + 1.0) * e.norm_sqr() / (1.0 - z.norm_sqr()))
}

/// Second moments from invariant means ⟨B⟩ and ⟨Â†⟩:
/// ⟨x²⟩ = |ε|²B − Re(ε²A†),
/// ⟨p²/2 + g/x²⟩ = ½[|ε̇|²B − Re(ε̇²A†)],
/// ⟨xp+px⟩ = 2[Re(ε̇ε*)B − Re(ε̇εA†)].
pub fn moments(b_mean: f64, a_dag_mean: Complex64, mode: &ModeState) -> (f64, f64, f64) {
    let eps = mode.eps;
    let eps_dot = mode.eps_dot;
    let x2 = eps.norm_sqr() * b_mean - (eps * eps * a_dag_mean).re;
    let energy_like =
        0.5 * (eps_dot.norm_sqr() * b_mean - (eps_dot * eps_dot * a_dag_mean).re);
    let xp_sym =
        2.0 * ((eps_dot * eps.conj()).re * b_mean - (eps_dot * eps * a_dag_mean).re);
    (x2, energy_like, xp_sym)
}

/// ⟨B⟩ in the α-state. Exact branch (d ≤ 50):
/// 1 + d + u²/(2(d+1)) · S_{d+1}(u)/S_d(u) with u = |α|², from the Bessel
/// series ratio; asymptotic branch (d ≥ 10³): 1 + d + |α|⁴/(2d).
pub fn mean_b_alpha(alpha: Complex64, d: f64) -> Result<f64> {
    check_d(d)?;
    let u = alpha.norm_sqr();
    if d <= ALPHA_EXACT_MAX_D {
        let ratio = bessel_series_s(d + 1.0, u) / bessel_series_s(d, u);
        Ok(1.0 + d + u * u / (2.0 * (d + 1.0)) * ratio)
    } else if d >= ASYMPTOTIC_MIN_D {
        Ok(1.0 + d + u * u / (2.0 * d))
    } else {
        Err(Error::RegimeGap {
            d,
            exact_max: ALPHA_EXACT_MAX_D,
            asymptotic_min: ASYMPTOTIC_MIN_D,
        })
    }
}

/// Evaluate a state's density on a sorted positive grid. `regime = None`
/// picks the natural branch: exact for number and z states, and for α-states
/// whichever side of the (50, 10³) gap d falls on.
pub fn evaluate_grid(
    spec: &StateSpec,
    mode: &ModeState,
    xs: &[f64],
    regime: Option<DensityRegime>,
) -> Result<DensityGrid> {
    if xs.is_empty() {
        return Err(Error::Domain("empty density grid".into()));
    }
    if !(xs[0] > 0.0) || !xs.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Domain(
            "grid must be strictly increasing and positive".into(),
        ));
    }
    let chosen = match (regime, spec.kind) {
        (Some(r), _) => r,
        (None, StateKind::AlphaState(_)) if spec.d >= ASYMPTOTIC_MIN_D => {
            DensityRegime::Asymptotic
        }
        (None, _) => DensityRegime::Exact,
    };
    if chosen == DensityRegime::Asymptotic && spec.d < ASYMPTOTIC_MIN_D {
        return Err(Error::Domain(format!(
            "asymptotic branch needs d >= {ASYMPTOTIC_MIN_D}, got {}",
            spec.d
        )));
    }
    let mut density = Vec::with_capacity(xs.len());
    for &x in xs {
        let rho = match (spec.kind, chosen) {
            (StateKind::NumberState(n), DensityRegime::Exact) => {
                psi_n_density(n, spec.d, mode, x)?
            }
            (StateKind::NumberState(n), DensityRegime::Asymptotic) => {
                psi_n_density_asymptotic(n, spec.d, mode, x)?
            }
            (StateKind::AlphaState(a), DensityRegime::Exact) => {
                if spec.d > ALPHA_EXACT_MAX_D {
                    return Err(Error::RegimeGap {
                        d: spec.d,
                        exact_max: ALPHA_EXACT_MAX_D,
                        asymptotic_min: ASYMPTOTIC_MIN_D,
                    });
                }
                alpha_state_density(a, spec.d, mode, x)?
            }
            (StateKind::AlphaState(a), DensityRegime::Asymptotic) => {
                alpha_state_density(a, spec.d, mode, x)?
            }
            (StateKind::ZState(z), DensityRegime::Exact) => {
                z_state_density(z, spec.d, mode, x)?
            }
            (StateKind::ZState(z), DensityRegime::Asymptotic) => {
                gaussian_density(z_state_mean_x2(z, spec.d, mode)?, mode.eps_abs_sq(), spec.d, x)
            }
        };
        density.push(rho);
    }
    Ok(DensityGrid {
        x: xs.to_vec(),
        density,
        regime: chosen,
        mode_time: mode.t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mode::{initial_mode, resonance_mode};

    fn rel_close(got: f64, want: f64, tol: f64) -> bool {
        (got - want).abs() <= tol * want.abs()
    }

    /// Wronskian-normalized state with a prescribed |ε|².
    fn mode_with_eps2(eps2: f64) -> ModeState {
        ModeState {
            t: 0.0,
            eps: Complex64::new(eps2.sqrt(), 0.0),
            eps_dot: Complex64::new(0.0, 1.0 / eps2.sqrt()),
        }
    }

    fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
        let h = (b - a) / (2 * panels) as f64;
        let mut total = f(a) + f(b);
        for i in 1..2 * panels {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            total += w * f(a + i as f64 * h);
        }
        total * h / 3.0
    }

    #[test]
    fn state_spec_validation() {
        assert!(StateSpec::new(StateKind::NumberState(3), 0.5).is_err());
        assert!(StateSpec::new(StateKind::NumberState(10_001), 2.0).is_err());
        assert!(StateSpec::new(StateKind::ZState(Complex64::new(1.0, 0.0)), 2.0).is_err());
        assert!(StateSpec::new(StateKind::ZState(Complex64::new(0.3, -0.2)), 2.0).is_ok());
        assert!(StateSpec::new(StateKind::AlphaState(Complex64::new(2.0, 1.0)), 2.0).is_ok());
    }

    #[test]
    fn ground_state_closed_form() {
        // n=0, d=2, |eps|^2=1: density = x^5 e^{-x^2}, so e^{-1} at x=1
        let m = initial_mode(1.0, 0.0);
        let got = psi_n_density(0, 2.0, &m, 1.0).unwrap();
        assert!(rel_close(got, (-1.0f64).exp(), 1e-12));
        let got = psi_n_density(0, 2.0, &m, 1.7).unwrap();
        assert!(rel_close(got, 1.7f64.powi(5) * (-1.7f64 * 1.7).exp(), 1e-12));
        assert!(psi_n_density(0, 2.0, &m, 1e-3).unwrap() < 1e-14);
        assert!(psi_n_density(0, 2.0, &m, 0.0).is_err());
        assert!(psi_n_density(0, 0.4, &m, 1.0).is_err());
    }

    #[test]
    fn number_state_frozen_spot() {
        // mpmath (dps=50): n=2, d=7.5, |eps|^2=2.3, x=1.7 ->
        // 0.0035164254753769067096
        let m = mode_with_eps2(2.3);
        let got = psi_n_density(2, 7.5, &m, 1.7).unwrap();
        assert!(rel_close(got, 0.0035164254753769067, 1e-12));
    }

    #[test]
    fn huge_d_peak_location() {
        let m = initial_mode(1.0, 0.0);
        let d: f64 = 1e5;
        let x_peak = (d + 0.5).sqrt();
        let at_peak = psi_n_density(0, d, &m, x_peak).unwrap();
        assert!(at_peak > psi_n_density(0, d, &m, x_peak - 0.05).unwrap());
        assert!(at_peak > psi_n_density(0, d, &m, x_peak + 0.05).unwrap());
        assert!(at_peak > 0.0);
    }

    #[test]
    fn exact_normalization_sweep() {
        let m = resonance_mode(0.02, 3.0);
        let eps2 = m.eps_abs_sq();
        for &d in &[2.0, 10.0, 1e3, 1e5] {
            for &n in &[0u32, 1, 2, 5] {
                let mean = eps2 * (2.0 * n as f64 + d + 1.0);
                let half = eps2
                    * (12.0 * (2.0 * (d + 2.0 * n as f64 + 1.0)).sqrt()
                        * (2.0 * n as f64 + 1.0).sqrt()
                        + 20.0);
                let lo = (mean - half).max(1e-6).sqrt();
                let hi = (mean + half).sqrt();
                let integral = simpson(
                    |x| psi_n_density(n, d, &m, x).unwrap(),
                    lo,
                    hi,
                    4000,
                );
                assert!(
                    (integral - 1.0).abs() < 1e-6,
                    "n={n} d={d}: integral {integral}"
                );
            }
        }
    }

    #[test]
    fn asymptotic_normalization_sweep() {
        let m = resonance_mode(0.02, 3.0);
        let eps2 = m.eps_abs_sq();
        for &d in &[1e3, 1e5] {
            for &n in &[0u32, 1, 2, 5] {
                let mean = eps2 * (2.0 * n as f64 + d + 1.0);
                let half =
                    eps2 * (12.0 * (2.0 * d).sqrt() * (2.0 * n as f64 + 1.0).sqrt() + 20.0);
                let lo = (mean - half).max(1e-6).sqrt();
                let hi = (mean + half).sqrt();
                let integral = simpson(
                    |x| psi_n_density_asymptotic(n, d, &m, x).unwrap(),
                    lo,
                    hi,
                    4000,
                );
                assert!(
                    (integral - 1.0).abs() < 1e-6,
                    "n={n} d={d}: integral {integral}"
                );
            }
        }
    }

    #[test]
    fn asymptotic_frozen_spot() {
        // mpmath (dps=50): n=3, d=2000, |eps|^2=1.7, x=58.9 ->
        // 0.26785172964969264074
        let m = mode_with_eps2(1.7);
        let got = psi_n_density_asymptotic(3, 2000.0, &m, 58.9).unwrap();
        assert!(rel_close(got, 0.26785172964969264, 1e-12));
        assert!(psi_n_density_asymptotic(3, 500.0, &m, 20.0).is_err());
    }

    #[test]
    fn asymptotic_agreement_measured_bounds() {
        // 50-digit sweep at d=1e5, |eps|^2=1 over y-tilde in [-4.6, 4.6]:
        // max |exact - asymptotic|/peak = 0.146% (n=0), 0.323% (n=1),
        // 0.790% (n=2), 3.31% (n=5); the n=5 figure is intrinsic to the
        // Hermite form's O(poly(n)/sqrt(d)) error, not an implementation gap
        let m = initial_mode(1.0, 0.0);
        let d: f64 = 1e5;
        let bounds = [(0u32, 0.0016), (1, 0.0036), (2, 0.0085), (5, 0.035)];
        // frozen cross-check of both branches at one point:
        // mpmath (dps=50): n=2, x=sqrt(d+1+1.3*sqrt(2d)) ->
        //   exact 0.41439661851230209886, asymptotic 0.41818384784030715707
        // tolerance 1e-9: the exact branch sums log-domain terms of size ~1e6
        // that cancel to O(1), so ~1e-10 absolute rounding in the log is
        // intrinsic at this d
        let x_spot = (d + 1.0 + 1.3 * (2.0 * d).sqrt()).sqrt();
        assert!(rel_close(
            psi_n_density(2, d, &m, x_spot).unwrap(),
            0.4143966185123021,
            1e-9
        ));
        assert!(rel_close(
            psi_n_density_asymptotic(2, d, &m, x_spot).unwrap(),
            0.41818384784030716,
            1e-11
        ));
        for (n, bound) in bounds {
            let mut peak: f64 = 0.0;
            let mut worst: f64 = 0.0;
            let mut pts = Vec::new();
            for j in -460..=460 {
                let u = d + 1.0 + (j as f64 / 100.0) * (2.0 * d).sqrt();
                let x = u.sqrt();
                let exact = psi_n_density(n, d, &m, x).unwrap();
                let asym = psi_n_density_asymptotic(n, d, &m, x).unwrap();
                peak = peak.max(exact);
                pts.push((exact, asym));
            }
            for (exact, asym) in pts {
                if exact > 1e-4 * peak {
                    worst = worst.max((exact - asym).abs() / peak);
                }
            }
            assert!(worst < bound, "n={n}: deviation-to-peak {worst} > {bound}");
        }
    }

    #[test]
    fn alpha_zero_reduces_to_ground_state() {
        let m = resonance_mode(0.02, 5.0);
        for &x in &[0.4, 1.0, 2.3] {
            let a = alpha_state_density(Complex64::new(0.0, 0.0), 8.0, &m, x).unwrap();
            let g = psi_n_density(0, 8.0, &m, x).unwrap();
            assert!(rel_close(a, g, 1e-12));
        }
    }

    #[test]
    fn alpha_frozen_spots() {
        // mpmath (dps=50): d=10, alpha=1+0.5i, eps=e^{0.7i}, eps_dot=i eps,
        // x=3.1 -> 0.84251540329173977306
        let m = ModeState {
            t: 0.0,
            eps: Complex64::from_polar(1.0, 0.7),
            eps_dot: Complex64::i() * Complex64::from_polar(1.0, 0.7),
        };
        let got = alpha_state_density(Complex64::new(1.0, 0.5), 10.0, &m, 3.1).unwrap();
        assert!(rel_close(got, 0.8425154032917398, 1e-12));
        // mpmath (dps=50): d=7, alpha=0.8-0.3i, constant omega=2 at t=1.1,
        // x=1.3 -> 0.20598112919969620204
        let m = initial_mode(2.0, 1.1);
        let got = alpha_state_density(Complex64::new(0.8, -0.3), 7.0, &m, 1.3).unwrap();
        assert!(rel_close(got, 0.2059811291996962, 1e-12));
    }

    #[test]
    fn alpha_exact_normalization() {
        let m = initial_mode(1.0, 0.0);
        let integral = simpson(
            |x| alpha_state_density(Complex64::new(1.0, 0.0), 10.0, &m, x).unwrap(),
            1e-6,
            12.0,
            6000,
        );
        assert!((integral - 1.0).abs() < 1e-6, "integral {integral}");
    }

    #[test]
    fn alpha_gaussian_branch_center() {
        let m = initial_mode(1.0, 0.0);
        let d: f64 = 1e5;
        let center = (1.0 + d).sqrt();
        let at_center =
            alpha_state_density(Complex64::new(0.0, 0.0), d, &m, center).unwrap();
        let off = (1.0 + d + 2.0 * d.sqrt()).sqrt();
        let at_off = alpha_state_density(Complex64::new(0.0, 0.0), d, &m, off).unwrap();
        assert!(at_center > at_off);
        assert!(rel_close(at_off / at_center, (-2.0f64).exp(), 1e-2));
    }

    #[test]
    fn alpha_gap_rejected() {
        let m = initial_mode(1.0, 0.0);
        match alpha_state_density(Complex64::new(1.0, 0.0), 300.0, &m, 17.0) {
            Err(Error::RegimeGap { d, .. }) => assert_eq!(d, 300.0),
            other => panic!("expected RegimeGap, got {other:?}"),
        }
        assert!(mean_b_alpha(Complex64::new(1.0, 0.0), 100.0).is_err());
    }

    #[test]
    fn mean_b_alpha_branches() {
        assert!(rel_close(
            mean_b_alpha(Complex64::new(1e-8, 0.0), 7.0).unwrap(),
            8.0,
            1e-9
        ));
        // mpmath (dps=50): d=10, |alpha|^2=3 -> 11.402329365879072648
        let got = mean_b_alpha(Complex64::new(3.0f64.sqrt(), 0.0), 10.0).unwrap();
        assert!(rel_close(got, 11.402329365879073, 1e-12));
        // asymptotic: |alpha|^4 = 2d shifts B by exactly one quantum
        let d: f64 = 1e5;
        let alpha = Complex64::new((2.0 * d).sqrt().sqrt(), 0.0);
        assert!(rel_close(mean_b_alpha(alpha, d).unwrap(), 2.0 + d, 1e-12));
    }

    #[test]
    fn z_state_zero_reduces_to_ground_state() {
        // needs an exactly normalized mode: the z-density exponent comes from
        // the Wronskian, which the closed resonance form carries only to O(k)
        let m = initial_mode(2.0, 1.1);
        for &x in &[0.4, 1.0, 2.3] {
            let z = z_state_density(Complex64::new(0.0, 0.0), 4.5, &m, x).unwrap();
            let g = psi_n_density(0, 4.5, &m, x).unwrap();
            assert!(rel_close(z, g, 1e-12));
        }
    }

    #[test]
    fn z_state_frozen_spot() {
        // mpmath (dps=50): z=0.3-0.2i, d=4.5, constant omega=2 at t=1.1,
        // x=1.9 -> density 0.86087117671000111110, <x^2> 2.9515367289493389974
        let m = initial_mode(2.0, 1.1);
        let z = Complex64::new(0.3, -0.2);
        let got = z_state_density(z, 4.5, &m, 1.9).unwrap();
        assert!(rel_close(got, 0.8608711767100011, 1e-12));
        let mean = z_state_mean_x2(z, 4.5, &m).unwrap();
        assert!(rel_close(mean, 2.951536728949339, 1e-12));
        assert!(z_state_density(Complex64::new(1.0, 0.1), 4.5, &m, 1.0).is_err());
    }

    #[test]
    fn z_state_normalization() {
        let m = initial_mode(2.0, 1.1);
        let z = Complex64::new(0.3, -0.2);
        let integral = simpson(
            |x| z_state_density(z, 4.5, &m, x).unwrap(),
            1e-6,
            9.0,
            6000,
        );
        assert!((integral - 1.0).abs() < 1e-6, "integral {integral}");
    }

    #[test]
    fn z_state_gaussian_agreement() {
        // 50-digit sweep at d=1e5, z=1e-4 e^{0.3i}: max |exact - Gaussian|/peak
        // = 0.149% over the central ±3.3 sigma band
        let m = ModeState {
            t: 0.0,
            eps: Complex64::from_polar(1.0, 0.7),
            eps_dot: Complex64::i() * Complex64::from_polar(1.0, 0.7),
        };
        let d: f64 = 1e5;
        let z = 1e-4 * Complex64::from_polar(1.0, 0.3);
        let mean = z_state_mean_x2(z, d, &m).unwrap();
        let mut peak: f64 = 0.0;
        let mut pts = Vec::new();
        for j in -330..=330 {
            let u = mean + (j as f64 / 100.0) * (2.0 * d).sqrt();
            let x = u.sqrt();
            let exact = z_state_density(z, d, &m, x).unwrap();
            let gauss = gaussian_density(mean, m.eps_abs_sq(), d, x);
            peak = peak.max(exact);
            pts.push((exact, gauss));
        }
        let mut worst: f64 = 0.0;
        for (exact, gauss) in pts {
            if exact > 1e-4 * peak {
                worst = worst.max((exact - gauss).abs() / peak);
            }
        }
        assert!(worst < 0.0025, "deviation-to-peak {worst}");
    }

    #[test]
    fn moment_formulas() {
        let m = initial_mode(1.0, 0.0);
        let (x2, energy, xp) = moments(7.5, Complex64::new(0.0, 0.0), &m);
        assert!(rel_close(x2, 7.5, 1e-14));
        assert!(rel_close(energy, 3.75, 1e-14));
        assert!(xp.abs() < 1e-14);
        // time independence at constant omega when A vanishes
        let m_later = initial_mode(1.0, 2.0);
        let (x2_later, ..) = moments(7.5, Complex64::new(0.0, 0.0), &m_later);
        assert!(rel_close(x2_later, x2, 1e-12));
        // number state at constant omega: <x^2> = (2n+d+1)/omega
        let m2 = initial_mode(2.0, 0.6);
        let (n, d) = (3.0, 9.0);
        let (x2_num, ..) = moments(2.0 * n + d + 1.0, Complex64::new(0.0, 0.0), &m2);
        assert!(rel_close(x2_num, (2.0 * n + d + 1.0) / 2.0, 1e-12));
    }

    #[test]
    fn alpha_moment_consistency() {
        // at large d the Gaussian-branch mean must equal |eps|^2 B - Re(eps^2 a*^2)
        // with B = 1 + d + |alpha|^4/(2d)
        let m = resonance_mode(0.02, 7.0);
        let d: f64 = 1e5;
        let alpha = Complex64::new(3.0, 1.0);
        let direct = alpha_mean_x2(alpha, d, &m).unwrap();
        let b = 1.0 + d + alpha.norm_sqr().powi(2) / (2.0 * d);
        let by_hand = m.eps_abs_sq() * b - (m.eps * m.eps * alpha.conj() * alpha.conj()).re;
        assert!(rel_close(direct, by_hand, 1e-12));
    }

    #[test]
    fn orthogonality_with_phases() {
        // exactly normalized mode with nontrivial modulus, rotation, and
        // quadratic phase: Im(eps_dot eps*) = 1 by construction
        let eps = 1.3 * Complex64::from_polar(1.0, 0.7);
        let m = ModeState {
            t: 0.0,
            eps,
            eps_dot: Complex64::new(0.45, 1.0 / eps.norm_sqr()) * eps,
        };
        let d = 6.5;
        for (n, mm) in [(0u32, 1u32), (0, 3), (1, 2), (2, 3)] {
            let overlap = |x: f64| {
                let a = psi_n_wavefunction(n, d, &m, x).unwrap();
                let b = psi_n_wavefunction(mm, d, &m, x).unwrap();
                a * b.conj()
            };
            let re = simpson(|x| overlap(x).re, 1e-6, 16.0, 6000);
            let im = simpson(|x| overlap(x).im, 1e-6, 16.0, 6000);
            assert!(
                (re * re + im * im).sqrt() < 1e-6,
                "overlap({n},{mm}) = {re}+{im}i"
            );
        }
        let norm = simpson(
            |x| psi_n_wavefunction(2, d, &m, x).unwrap().norm_sqr(),
            1e-6,
            16.0,
            6000,
        );
        assert!((norm - 1.0).abs() < 1e-6);
        // wavefunction modulus squared matches the density path
        let w = psi_n_wavefunction(2, d, &m, 2.1).unwrap();
        let rho = psi_n_density(2, d, &m, 2.1).unwrap();
        assert!(rel_close(w.norm_sqr(), rho, 1e-12));
    }

    #[test]
    fn relative_width_scaling() {
        let m = initial_mode(1.0, 0.0);
        for &d in &[1e3f64, 1e4, 1e5] {
            let mean = 1.0 + d;
            let sigma = d.sqrt();
            let lo = (mean - 8.0 * sigma).max(1.0).sqrt();
            let hi = (mean + 8.0 * sigma).sqrt();
            let rho = |x: f64| {
                alpha_state_density(Complex64::new(0.0, 0.0), d, &m, x).unwrap()
            };
            let m2 = simpson(|x| x * x * rho(x), lo, hi, 4000);
            let m4 = simpson(|x| x * x * x * x * rho(x), lo, hi, 4000);
            let std_x2 = (m4 - m2 * m2).sqrt();
            let ratio = std_x2 / m2;
            let target = 1.0 / d.sqrt();
            assert!(
                (ratio / target - 1.0).abs() < 0.1,
                "d={d}: ratio {ratio} vs {target}"
            );
        }
    }

    #[test]
    fn grid_evaluation_and_regimes() {
        let m = initial_mode(1.0, 0.0);
        let spec = StateSpec::new(StateKind::NumberState(1), 10.0).unwrap();
        let xs: Vec<f64> = (1..=240).map(|i| i as f64 * 0.05).collect();
        let grid = evaluate_grid(&spec, &m, &xs, None).unwrap();
        assert_eq!(grid.regime, DensityRegime::Exact);
        assert_eq!(grid.mode_time, 0.0);
        assert!(grid.density.iter().all(|&r| r >= 0.0));
        let integral = grid.trapezoid();
        assert!((0.99..=1.01).contains(&integral), "trapezoid {integral}");

        let spec_big = StateSpec::new(StateKind::NumberState(1), 1e5).unwrap();
        let xs_big: Vec<f64> = (-300..=300)
            .map(|j| (1e5 + 3.0 + (j as f64 / 50.0) * (2e5f64).sqrt()).sqrt())
            .collect();
        let grid_big =
            evaluate_grid(&spec_big, &m, &xs_big, Some(DensityRegime::Asymptotic)).unwrap();
        assert_eq!(grid_big.regime, DensityRegime::Asymptotic);
        let integral = grid_big.trapezoid();
        assert!((0.99..=1.01).contains(&integral), "trapezoid {integral}");

        let alpha_spec =
            StateSpec::new(StateKind::AlphaState(Complex64::new(1.0, 0.0)), 1e5).unwrap();
        let auto = evaluate_grid(&alpha_spec, &m, &xs_big, None).unwrap();
        assert_eq!(auto.regime, DensityRegime::Asymptotic);

        assert!(evaluate_grid(&spec, &m, &[], None).is_err());
        assert!(evaluate_grid(&spec, &m, &[1.0, 1.0], None).is_err());
        assert!(evaluate_grid(&spec, &m, &[-1.0, 1.0], None).is_err());
        assert!(evaluate_grid(&spec, &m, &xs, Some(DensityRegime::Asymptotic)).is_err());
    }
}
