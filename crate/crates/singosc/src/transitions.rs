//! Transition probabilities W_n^m between singular-oscillator energy levels
//! under a frequency change with reflection coefficient r, in every regime:
//! the exact Jacobi and hypergeometric forms, the harmonic-oscillator parity
//! reduction at d = ±1/2, the large-d Laguerre asymptotics, the far-tail
//! Poisson product, and the small-r adiabatic expansion. Matrix assembly
//! tracks row sums and truncation tail bounds.

use crate::error::{Error, Result};
use crate::specfun::{
    hypergeom_terminating, jacobi_shifted_log, laguerre_log, log_gamma, log_gamma_ratio,
};

/// Which formula evaluates a transition probability. Dispatch is always
/// explicit; no branch is selected silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    ExactJacobi,
    ExactHypergeom,
    Oscillator,
    LargeD,
    LargeDPoisson,
    Adiabatic,
}

/// One transition probability request.
#[derive(Debug, Clone, Copy)]
pub struct TransitionQuery {
    pub n: u32,
    pub m: u32,
    pub d: f64,
    pub r: f64,
    pub regime: Regime,
}

impl TransitionQuery {
    pub fn evaluate(&self) -> Result<f64> {
        evaluate_regime(self.regime, self.n, self.m, self.d, self.r)
    }
}

const MAX_LEVEL: u32 = 10_000;
const LARGE_D_MIN: f64 = 1e3;

fn split(n: u32, m: u32) -> (u32, u32, u32) {
    (n.min(m), n.max(m), n.abs_diff(m))
}

fn check_r(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("r must lie in [0,1), got {r}")));
    }
    Ok(())
}

fn check_d_exact(d: f64) -> Result<()> {
    if d > 0.5 || d == 0.5 || d == -0.5 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "d must exceed 1/2 or be exactly +-1/2, got {d}"
        )))
    }
}

fn check_levels(n: u32, m: u32) -> Result<()> {
    if n > MAX_LEVEL || m > MAX_LEVEL {
        return Err(Error::Domain(format!(
            "levels capped at {MAX_LEVEL}, got ({n}, {m})"
        )));
    }
    Ok(())
}

/// Exact transition probability via the Jacobi-polynomial form:
/// W = μ!Γ(ν+d+1)/(ν!Γ(μ+d+1)) r^{|m−n|} (1−r)^{d+1} [P_μ^{(|m−n|,d)}(1−2r)]².
pub fn w_exact(n: u32, m: u32, d: f64, r: f64) -> Result<f64> {
    check_levels(n, m)?;
    check_d_exact(d)?;
    check_r(r)?;
    if r == 0.0 {
        return Ok(if n == m { 1.0 } else { 0.0 });
    }
    let (mu, _nu, a) = split(n, m);
    let p = jacobi_shifted_log(mu, a as f64, d, -2.0 * r);
    if p.sign == 0 {
        return Ok(0.0);
    }
    // Gamma ratios as short log sums: differencing lnGamma at d ~ 1e5 would
    // cost ~1e-10 of the result
    let log_w = log_gamma_ratio(mu as f64 + d + 1.0, a)? - log_gamma_ratio(mu as f64 + 1.0, a)?
        + a as f64 * r.ln()
        + (d + 1.0) * (-r).ln_1p()
        + 2.0 * p.log_magnitude;
    Ok(log_w.exp())
}

/// The same probability through the terminating hypergeometric form
/// ν!Γ(ν+d+1)/(μ!Γ(μ+d+1)(|m−n|!)²) r^{|m−n|}(1−r)^{d+1} F(−μ,ν+d+1;|m−n|+1;r)².
/// Kept as an independent cross-check of [`w_exact`]; the linear-domain F
/// limits it to arguments where the series terms stay within f64 range.
pub fn w_exact_hypergeom(n: u32, m: u32, d: f64, r: f64) -> Result<f64> {
    check_levels(n, m)?;
    check_d_exact(d)?;
    check_r(r)?;
    if r == 0.0 {
        return Ok(if n == m { 1.0 } else { 0.0 });
    }
    let (mu, nu, a) = split(n, m);
    let f = hypergeom_terminating(-(mu as i32), nu as f64 + d + 1.0, a as f64 + 1.0, r)?;
    if f == 0.0 {
        return Ok(0.0);
    }
    let log_w = log_gamma_ratio(mu as f64 + 1.0, a)? + log_gamma_ratio(mu as f64 + d + 1.0, a)?
        - 2.0 * log_gamma(a as f64 + 1.0)?
        + a as f64 * r.ln()
        + (d + 1.0) * (-r).ln_1p()
        + 2.0 * f.abs().ln();
    Ok(log_w.exp())
}

/// Harmonic-oscillator transition probability between levels of the same
/// parity: W_k^j = k!j! r^{|k−j|/2}√(1−r)/(2^{|k−j|}((k+j)/2)!²) ·
/// [P_s^{(h,h)}(√(1−r))]² with h = |k−j|/2 and degree s = min(k,j).
/// Opposite parity returns exactly 0.
pub fn w_oscillator(k: u32, j: u32, r: f64) -> Result<f64> {
    check_levels(k, j)?;
    check_r(r)?;
    if (k + j) % 2 == 1 {
        return Ok(0.0);
    }
    let h = k.abs_diff(j) / 2;
    let s = k.min(j);
    if r == 0.0 {
        return Ok(if k == j { 1.0 } else { 0.0 });
    }
    // sqrt(1-r) - 1 without cancellation, feeding the shifted Jacobi form
    let delta = (0.5 * (-r).ln_1p()).exp_m1();
    let p = jacobi_shifted_log(s, h as f64, h as f64, delta);
    if p.sign == 0 {
        return Ok(0.0);
    }
    // k! j!/(((k+j)/2)!)^2 = Gamma(top+1)/Gamma(half+1) / (Gamma(half+1)/Gamma(low+1))
    let half_sum = (k + j) / 2;
    let low = k.min(j);
    let log_w = log_gamma_ratio(half_sum as f64 + 1.0, h)?
        - log_gamma_ratio(low as f64 + 1.0, h)?
        - 2.0 * h as f64 * std::f64::consts::LN_2
        + h as f64 * r.ln()
        + 0.5 * (-r).ln_1p()
        + 2.0 * p.log_magnitude;
    Ok(log_w.exp())
}

/// Large-d limit in exponential form, a function of the single variable rd:
/// W = (μ!/ν!)(rd)^{|m−n|} e^{−rd} [L_μ^{|m−n|}(rd)]².
pub fn w_large_d(n: u32, m: u32, rd: f64) -> Result<f64> {
    if n > 1000 || m > 1000 {
        return Err(Error::Domain(format!(
            "large-d levels capped at 1000, got ({n}, {m})"
        )));
    }
    if !(rd >= 0.0) {
        return Err(Error::Domain(format!("rd must be nonnegative, got {rd}")));
    }
    if rd == 0.0 {
        return Ok(if n == m { 1.0 } else { 0.0 });
    }
    let (mu, _nu, a) = split(n, m);
    let lag = laguerre_log(mu, a as f64, rd);
    if lag.sign == 0 {
        return Ok(0.0);
    }
    let log_w =
        -log_gamma_ratio(mu as f64 + 1.0, a)? + a as f64 * rd.ln() - rd + 2.0 * lag.log_magnitude;
    Ok(log_w.exp())
}

/// Large-d variant keeping the full power (1−r)^{d+1} instead of e^{−rd};
/// the two differ by exp((d+1)ln(1−r) + rd) = 1 + O(r²d).
pub fn w_large_d_power(n: u32, m: u32, d: f64, r: f64) -> Result<f64> {
    check_r(r)?;
    let rd = r * d;
    if r == 0.0 {
        return Ok(if n == m { 1.0 } else { 0.0 });
    }
    let base = w_large_d(n, m, rd)?;
    Ok(base * ((d + 1.0) * (-r).ln_1p() + rd).exp())
}

/// Far-tail product form for rd ≫ n, m: W ≈ e^{−rd}(rd)^{n+m}/(n!m!).
/// Errors outside its validity region (where the formula would exceed 1).
pub fn w_poisson_product(n: u32, m: u32, rd: f64) -> Result<f64> {
    if n > 1000 || m > 1000 {
        return Err(Error::Domain(format!(
            "far-tail levels capped at 1000, got ({n}, {m})"
        )));
    }
    if !(rd >= 0.0) {
        return Err(Error::Domain(format!("rd must be nonnegative, got {rd}")));
    }
    if rd == 0.0 {
        return Ok(if n + m == 0 { 1.0 } else { 0.0 });
    }
    let log_w = (n + m) as f64 * rd.ln() - rd
        - log_gamma(n as f64 + 1.0)?
        - log_gamma(m as f64 + 1.0)?;
    if log_w > 0.0 {
        return Err(Error::Domain(format!(
            "far-tail product form invalid at (n={n}, m={m}, rd={rd}): value exceeds 1"
        )));
    }
    Ok(log_w.exp())
}

/// First-order small-r expansion:
/// W = ν!Γ(ν+d+1)/(μ!Γ(μ+d+1)(|m−n|!)²) r^{|m−n|}
/// [1 − (2mn+(d+1)(m+n+1))/(|m−n|+1) · r].
pub fn w_adiabatic(n: u32, m: u32, d: f64, r: f64) -> Result<f64> {
    check_levels(n, m)?;
    check_d_exact(d)?;
    check_r(r)?;
    let correction = r * (2.0 * (m as f64) * (n as f64) + (d + 1.0) * ((m + n) as f64 + 1.0));
    if correction >= 0.1 {
        return Err(Error::AdiabaticPrecondition { term: correction });
    }
    let (mu, _nu, a) = split(n, m);
    if r == 0.0 && a > 0 {
        return Ok(0.0);
    }
    let mut log_pref = log_gamma_ratio(mu as f64 + 1.0, a)?
        + log_gamma_ratio(mu as f64 + d + 1.0, a)?
        - 2.0 * log_gamma(a as f64 + 1.0)?;
    if a > 0 {
        log_pref += a as f64 * r.ln();
    }
    Ok(log_pref.exp() * (1.0 - correction / (a as f64 + 1.0)))
}

fn evaluate_regime(regime: Regime, n: u32, m: u32, d: f64, r: f64) -> Result<f64> {
    match regime {
        Regime::ExactJacobi => w_exact(n, m, d, r),
        Regime::ExactHypergeom => w_exact_hypergeom(n, m, d, r),
        Regime::Oscillator => {
            check_r(r)?;
            if d == 0.5 {
                w_oscillator(2 * n + 1, 2 * m + 1, r)
            } else if d == -0.5 {
                w_oscillator(2 * n, 2 * m, r)
            } else {
                Err(Error::Domain(format!(
                    "oscillator regime requires d = +1/2 or -1/2, got {d}"
                )))
            }
        }
        Regime::LargeD => {
            check_large_d(d)?;
            check_r(r)?;
            w_large_d(n, m, r * d)
        }
        Regime::LargeDPoisson => {
            check_large_d(d)?;
            check_r(r)?;
            w_poisson_product(n, m, r * d)
        }
        Regime::Adiabatic => w_adiabatic(n, m, d, r),
    }
}

fn check_large_d(d: f64) -> Result<()> {
    if !(d >= LARGE_D_MIN) {
        return Err(Error::Domain(format!(
            "large-d regimes need d >= {LARGE_D_MIN}, got {d}"
        )));
    }
    Ok(())
}

/// A block of W_n^m with unitarity accounting. `tail_bounds[n]` bounds the
/// probability truncated away beyond `cols` in row n, so
/// 1 − row_sums[n] ≤ tail_bounds[n]; rows whose tail cannot be certified
/// (far-tail Poisson fragments, adiabatic rows leaving their validity range)
/// carry the conservative bound 1.
#[derive(Debug, Clone)]
pub struct TransitionMatrix {
    pub entries: Vec<Vec<f64>>,
    pub rows: usize,
    pub cols: usize,
    pub row_sums: Vec<f64>,
    pub tail_bounds: Vec<f64>,
    /// Column index where geometric decay was established, per row.
    pub tail_onset_cols: Vec<Option<usize>>,
    pub regime: Regime,
    pub d: f64,
    pub r: f64,
}

impl TransitionMatrix {
    /// Worst tail bound over all rows.
    pub fn tail_bound(&self) -> f64 {
        self.tail_bounds.iter().fold(0.0, |acc, &b| acc.max(b))
    }
}

/// Roundoff allowance folded into tail bounds so the row-sum inequality
/// holds despite rounding. Entries are assembled as exp of sums whose
/// individual terms reach the size of the log-gamma values involved, so the
/// per-entry relative error scales with that log magnitude, not with ulp(1).
fn sum_allowance(terms: usize, log_scale: f64) -> f64 {
    1e-15 + 5e-16 * terms as f64 + 1e-15 * log_scale.max(0.0)
}

/// Largest log magnitude entering a row's dominant entries, per regime.
/// Gamma ratios enter as short log sums, so the scale is set by r·d and the
/// level factorials rather than by ln Γ(d).
fn assembly_log_scale(regime: Regime, d: f64, r: f64, rows: usize, cols: usize) -> f64 {
    let top = (rows + cols) as f64;
    match regime {
        Regime::Oscillator => log_gamma(2.0 * top + 2.0).unwrap_or(0.0),
        _ => r * d + log_gamma(top + 1.0).unwrap_or(0.0),
    }
}

/// Chernoff bound on the Poisson(λ) upper tail P(X ≥ m).
fn poisson_tail_bound(lambda: f64, m: f64) -> f64 {
    if m <= lambda {
        1.0
    } else if lambda == 0.0 {
        0.0
    } else {
        (-lambda + m * (1.0 + lambda.ln() - m.ln())).exp()
    }
}

/// Tail beyond `cols` for a row evaluated by `entry`, by extending the row
/// until five consecutive ratios fall below 0.95 and bounding the remainder
/// geometrically. Returns (bound, onset column).
fn geometric_tail<F: Fn(u32) -> Result<f64>>(
    entry: F,
    cols: usize,
    last_in_matrix: f64,
    base_allowance: f64,
) -> (f64, Option<usize>) {
    let mut extension = 0.0;
    let mut last = last_in_matrix;
    let mut streak = 0;
    let mut m = cols as u32;
    loop {
        let w = match entry(m) {
            Ok(w) => w,
            Err(_) => return (1.0, None),
        };
        extension += w;
        if last > 0.0 && w / last < 0.95 {
            streak += 1;
            if streak == 5 {
                let remainder = w * 0.95 / 0.05;
                return (extension + remainder + base_allowance, Some(m as usize));
            }
        } else {
            streak = 0;
        }
        last = w;
        m += 1;
        if m as usize > cols + 4000 {
            return (1.0, None);
        }
    }
}

/// Fill a rows×cols block of transition probabilities in one regime,
/// with row sums and per-row truncation tail bounds.
pub fn transition_matrix(
    d: f64,
    r: f64,
    rows: usize,
    cols: usize,
    regime: Regime,
) -> Result<TransitionMatrix> {
    if rows == 0 || cols == 0 || rows > 200 || cols > 200 {
        return Err(Error::Domain(format!(
            "matrix shape must be within 1..=200, got {rows}x{cols}"
        )));
    }
    let mut entries = Vec::with_capacity(rows);
    let mut row_sums = Vec::with_capacity(rows);
    let mut tail_bounds = Vec::with_capacity(rows);
    let mut tail_onsets = Vec::with_capacity(rows);
    let allowance = sum_allowance(cols, assembly_log_scale(regime, d, r, rows, cols));
    for n in 0..rows as u32 {
        let mut row = Vec::with_capacity(cols);
        for m in 0..cols as u32 {
            row.push(evaluate_regime(regime, n, m, d, r)?);
        }
        let sum: f64 = row.iter().sum();
        let (bound, onset) = match regime {
            Regime::LargeD => {
                let lambda = r * d + n as f64;
                (poisson_tail_bound(lambda, cols as f64) + allowance, None)
            }
            Regime::LargeDPoisson | Regime::Adiabatic => (1.0, None),
            _ if r == 0.0 => {
                // identity matrix: the tail is exactly the diagonal entry
                // when it lies beyond the block
                let missed = if (n as usize) < cols { 0.0 } else { 1.0 };
                (missed + allowance, None)
            }
            _ => geometric_tail(
                |m| evaluate_regime(regime, n, m, d, r),
                cols,
                row[cols - 1],
                allowance,
            ),
        };
        if sum > 1.0 + 1e-10 {
            return Err(Error::Domain(format!(
                "row {n} sums to {sum} > 1; formula used outside its validity region"
            )));
        }
        entries.push(row);
        row_sums.push(sum);
        tail_bounds.push(bound.min(1.0));
        tail_onsets.push(onset);
    }
    Ok(TransitionMatrix {
        entries,
        rows,
        cols,
        row_sums,
        tail_bounds,
        tail_onset_cols: tail_onsets,
        regime,
        d,
        r,
    })
}
