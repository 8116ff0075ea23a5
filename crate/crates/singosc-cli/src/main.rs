//! Command-line front end: trap parameters, classical mode trajectories,
//! state densities, transition matrices, and the named figure datasets.
//!
//! Exit codes: 0 success, 1 usage or I/O failure, 2 numerical domain error.

mod config;
mod output;
mod profile;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;

use singosc::figures;
use singosc::mode::{bogoliubov, integrate_mode, mode_at, reflection_coefficient, ModeState};
use singosc::states::{
    alpha_mean_x2, evaluate_grid, z_state_mean_x2, DensityRegime, StateKind, StateSpec,
};
use singosc::transitions::{transition_matrix, Regime};
use singosc::trap::{effective_params, TrapParameters};

use config::Config;
use output::{emit, long_csv, matrix_csv};
use profile::{natural_start, parse_profile};

/// Failure category mapped onto the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, malformed specs, unreadable or unwritable files: exit 1.
    Usage(String),
    /// The library rejected the numbers: exit 2.
    Numerical(singosc::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "error: {msg}"),
            CliError::Numerical(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<singosc::Error> for CliError {
    fn from(e: singosc::Error) -> Self {
        CliError::Numerical(e)
    }
}

#[derive(Parser)]
#[command(
    name = "singosc",
    version,
    about = "Singular-oscillator model of two-ion relative motion: trap \
             parameters, mode dynamics, state densities, transition matrices"
)]
struct Cli {
    /// Flat key=value file supplying any long flag left unset.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derive model constants from trap voltage, spacing, and mass ratio.
    Params(ParamsArgs),
    /// Integrate the classical mode over a time span.
    Mode(ModeArgs),
    /// Evaluate a state density over an x grid at one or more times.
    Density(DensityArgs),
    /// Transition-probability matrix with row sums and tail bounds.
    Transitions(TransitionsArgs),
    /// Regenerate the dataset behind a named figure (fig1..fig6).
    Figure(FigureArgs),
}

#[derive(Args)]
struct ParamsArgs {
    /// Reduced mass in electron masses.
    #[arg(long, value_name = "RATIO")]
    mu_ratio: Option<f64>,
    /// Trap voltage in volts.
    #[arg(long, value_name = "VOLTS")]
    voltage: Option<f64>,
    /// Electrode half spacing in meters.
    #[arg(long, value_name = "METERS")]
    half_spacing: Option<f64>,
    /// Charge number of each ion (default 1).
    #[arg(long, value_name = "Q")]
    charge: Option<f64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ModeArgs {
    /// Frequency profile, e.g. constant:omega=1 or resonance:k=0.02.
    #[arg(long, value_name = "SPEC")]
    profile: Option<String>,
    /// Start time (default: the profile's natural start).
    #[arg(long, value_name = "T")]
    t0: Option<f64>,
    /// End time.
    #[arg(long, value_name = "T")]
    t1: Option<f64>,
    /// Relative tolerance of the adaptive integrator (default 1e-10).
    #[arg(long, value_name = "TOL")]
    rel_tol: Option<f64>,
    /// Write the trajectory CSV here; stdout then carries a JSON summary.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DensityArgs {
    /// State: number:N, alpha:RE,IM, or z:RE,IM.
    #[arg(long, value_name = "SPEC")]
    state: Option<String>,
    /// Level parameter d.
    #[arg(long, value_name = "D")]
    d: Option<f64>,
    /// Frequency profile evolving the mode (default constant:omega=1).
    #[arg(long, value_name = "SPEC")]
    profile: Option<String>,
    /// Comma-separated mode times (default 0).
    #[arg(long, value_name = "LIST")]
    times: Option<String>,
    /// Relative tolerance when the mode must be integrated (default 1e-10).
    #[arg(long, value_name = "TOL")]
    rel_tol: Option<f64>,
    /// Force a branch: exact or asymptotic (default: let the library pick).
    #[arg(long, value_name = "NAME")]
    regime: Option<String>,
    /// Grid start, used together with --x-max (default: auto around the mean).
    #[arg(long, value_name = "X")]
    x_min: Option<f64>,
    /// Grid end, used together with --x-min.
    #[arg(long, value_name = "X")]
    x_max: Option<f64>,
    /// Grid resolution (default 201).
    #[arg(long, value_name = "N")]
    points: Option<usize>,
    /// Mirror the grid to x < 0, halving each density.
    #[arg(long)]
    full_axis: bool,
    /// Write the CSV here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TransitionsArgs {
    /// Level parameter d.
    #[arg(long, value_name = "D")]
    d: Option<f64>,
    /// Reflection coefficient r.
    #[arg(long, value_name = "R")]
    r: Option<f64>,
    /// Product r*d, an alternative to --r; exactly one of the two.
    #[arg(long, value_name = "RD")]
    rd: Option<f64>,
    /// Number of starting levels n (default 10).
    #[arg(long, value_name = "N")]
    rows: Option<usize>,
    /// Number of final levels m (default 10).
    #[arg(long, value_name = "N")]
    cols: Option<usize>,
    /// exact-jacobi, exact-hypergeom, oscillator, large-d, large-d-poisson,
    /// or adiabatic (default exact-jacobi).
    #[arg(long, value_name = "NAME")]
    regime: Option<String>,
    /// Write the matrix CSV here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Write the JSON sidecar here (default: OUT with .sidecar.json).
    #[arg(long, value_name = "PATH")]
    sidecar: Option<PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    /// Which dataset: fig1 through fig6.
    #[arg(value_name = "NAME")]
    name: String,
    /// Directory receiving NAME.csv and NAME.manifest.json (default .).
    #[arg(long, value_name = "DIR")]
    out_dir: Option<PathBuf>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests arrive as Err but must exit clean
            let code = i32::from(e.use_stderr());
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Params(args) => run_params(args, &cfg),
        Command::Mode(args) => run_mode(args, &cfg),
        Command::Density(args) => run_density(args, &cfg),
        Command::Transitions(args) => run_transitions(args, &cfg),
        Command::Figure(args) => run_figure(args, &cfg),
    }
}

#[derive(Serialize)]
struct ParamsReport {
    mu_ratio: f64,
    voltage_v: f64,
    half_spacing_m: f64,
    charge: f64,
    mu_kg: f64,
    omega: f64,
    omega_g: f64,
    g_si: f64,
    g_star: f64,
    d: f64,
    n_max: f64,
    n_max_is_order_of_magnitude: bool,
    x_e: f64,
    x_g: f64,
    big_omega_e: f64,
    big_omega_g: f64,
    v_min: f64,
    vg_min: f64,
    library_version: &'static str,
}

fn run_params(args: ParamsArgs, cfg: &Config) -> Result<(), CliError> {
    let mu_ratio = cfg.require(args.mu_ratio, "mu-ratio")?;
    let voltage = cfg.require(args.voltage, "voltage")?;
    let half_spacing = cfg.require(args.half_spacing, "half-spacing")?;
    let charge = cfg.merge_or(args.charge, "charge", 1.0)?;
    let out: Option<PathBuf> = cfg.merge(args.out, "out")?;

    let trap = TrapParameters::with_charge(mu_ratio, voltage, half_spacing, charge)?;
    let p = effective_params(&trap);
    let report = ParamsReport {
        mu_ratio,
        voltage_v: voltage,
        half_spacing_m: half_spacing,
        charge,
        mu_kg: p.mu_kg,
        omega: p.omega,
        omega_g: p.omega_g,
        g_si: p.g_si,
        g_star: p.g_star,
        d: p.d,
        n_max: p.n_max,
        n_max_is_order_of_magnitude: p.n_max_is_order_of_magnitude,
        x_e: p.x_e,
        x_g: p.x_g,
        big_omega_e: p.big_omega_e,
        big_omega_g: p.big_omega_g,
        v_min: p.v_min,
        vg_min: p.vg_min,
        library_version: singosc::version(),
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    emit(out.as_deref(), &text)
}

#[derive(Serialize)]
struct ModeSummary {
    omega_i: f64,
    omega_f: f64,
    t0: f64,
    t1: f64,
    rel_tol: f64,
    steps: usize,
    eps_re: f64,
    eps_im: f64,
    eps_dot_re: f64,
    eps_dot_im: f64,
    abs_eps_sq: f64,
    max_wronskian_drift: f64,
    /// r = |eta/xi|^2 from the two-term inversion at t1, or null when the
    /// endpoint normalization is too corrupted to invert.
    reflection_coefficient: Option<f64>,
}

fn run_mode(args: ModeArgs, cfg: &Config) -> Result<(), CliError> {
    let spec: String = cfg.require(args.profile, "profile")?;
    let profile = parse_profile(&spec)?;
    let t0 = cfg.merge_or(args.t0, "t0", natural_start(&profile))?;
    let t1: f64 = cfg.require(args.t1, "t1")?;
    let rel_tol = cfg.merge_or(args.rel_tol, "rel-tol", 1e-10)?;
    let out: Option<PathBuf> = cfg.merge(args.out, "out")?;

    let traj = integrate_mode(&profile, t0, t1, rel_tol)?;
    let csv = long_csv(
        &[
            "t",
            "eps_re",
            "eps_im",
            "eps_dot_re",
            "eps_dot_im",
            "abs_eps_sq",
            "wronskian_drift",
        ],
        traj.states.iter().map(|s| {
            vec![
                s.t,
                s.eps.re,
                s.eps.im,
                s.eps_dot.re,
                s.eps_dot.im,
                s.eps_abs_sq(),
                s.wronskian_drift(),
            ]
        }),
    );
    emit(out.as_deref(), &csv)?;

    if out.is_some() {
        let last = traj.states.last().expect("trajectory includes endpoints");
        let reflection = match bogoliubov(last, profile.omega_f()) {
            Ok(pair) => Some(reflection_coefficient(&pair)),
            Err(singosc::Error::NotSettled { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        let summary = ModeSummary {
            omega_i: profile.omega_i(),
            omega_f: profile.omega_f(),
            t0,
            t1,
            rel_tol,
            steps: traj.states.len(),
            eps_re: last.eps.re,
            eps_im: last.eps.im,
            eps_dot_re: last.eps_dot.re,
            eps_dot_im: last.eps_dot.im,
            abs_eps_sq: last.eps_abs_sq(),
            max_wronskian_drift: traj.max_wronskian_drift,
            reflection_coefficient: reflection,
        };
        println!(
            "{}",
            serde_json::to_string(&summary).expect("summary serializes")
        );
    }
    Ok(())
}

/// number:N, alpha:RE,IM, or z:RE,IM.
fn parse_state(spec: &str) -> Result<StateKind, CliError> {
    let bad = |msg: String| CliError::Usage(format!("state {spec}: {msg}"));
    let Some((kind, rest)) = spec.split_once(':') else {
        return Err(bad("expected number:N, alpha:RE,IM, or z:RE,IM".into()));
    };
    match kind {
        "number" => rest
            .parse()
            .map(StateKind::NumberState)
            .map_err(|e| bad(format!("level {rest}: {e}"))),
        "alpha" | "z" => {
            let Some((re, im)) = rest.split_once(',') else {
                return Err(bad(format!("expected {kind}:RE,IM")));
            };
            let re: f64 = re.trim().parse().map_err(|e| bad(format!("re: {e}")))?;
            let im: f64 = im.trim().parse().map_err(|e| bad(format!("im: {e}")))?;
            let c = Complex64::new(re, im);
            Ok(if kind == "alpha" {
                StateKind::AlphaState(c)
            } else {
                StateKind::ZState(c)
            })
        }
        other => Err(bad(format!("unknown state kind {other}"))),
    }
}

fn parse_times(list: &str) -> Result<Vec<f64>, CliError> {
    let times: Result<Vec<f64>, CliError> = list
        .split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|e| CliError::Usage(format!("time {part}: {e}")))
        })
        .collect();
    let times = times?;
    if times.is_empty() {
        return Err(CliError::Usage("empty time list".into()));
    }
    Ok(times)
}

fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    (0..points)
        .map(|j| lo + (hi - lo) * j as f64 / (points - 1) as f64)
        .collect()
}

/// Cover the density support: x^2 sampled linearly over mean +/- 6 std,
/// with the lower edge clamped above zero.
fn auto_grid(spec: &StateSpec, mode: &ModeState, points: usize) -> Result<Vec<f64>, CliError> {
    let eps2 = mode.eps_abs_sq();
    let d = spec.d;
    let (mean, sigma) = match spec.kind {
        StateKind::NumberState(n) => (
            eps2 * (2.0 * f64::from(n) + d + 1.0),
            eps2 * (d * (2.0 * f64::from(n) + 1.0)).sqrt(),
        ),
        StateKind::AlphaState(a) => (
            alpha_mean_x2(a, d, mode)?,
            eps2 * d.sqrt() * a.norm().max(1.0),
        ),
        StateKind::ZState(z) => {
            let mean = z_state_mean_x2(z, d, mode)?;
            let width = mean / (d + 1.0).sqrt() * (1.0 + z.norm()) / (1.0 - z.norm());
            (mean, width)
        }
    };
    let span = 6.0 * sigma;
    let lo = if mean - span > 0.0 {
        mean - span
    } else {
        mean * 1e-6
    };
    let hi = mean + span;
    Ok(linspace(lo, hi, points).iter().map(|v| v.sqrt()).collect())
}

fn run_density(args: DensityArgs, cfg: &Config) -> Result<(), CliError> {
    let state_spec: String = cfg.require(args.state, "state")?;
    let d: f64 = cfg.require(args.d, "d")?;
    let spec = StateSpec::new(parse_state(&state_spec)?, d)?;
    let profile_spec = cfg.merge_or(args.profile, "profile", "constant:omega=1".to_string())?;
    let profile = parse_profile(&profile_spec)?;
    let times = parse_times(&cfg.merge_or(args.times, "times", "0".to_string())?)?;
    let rel_tol = cfg.merge_or(args.rel_tol, "rel-tol", 1e-10)?;
    let regime = match cfg.merge(args.regime, "regime")?.as_deref() {
        None => None,
        Some("exact") => Some(DensityRegime::Exact),
        Some("asymptotic") => Some(DensityRegime::Asymptotic),
        Some(other) => {
            return Err(CliError::Usage(format!(
                "unknown density regime {other}; use exact or asymptotic"
            )))
        }
    };
    let x_min = cfg.merge(args.x_min, "x-min")?;
    let x_max = cfg.merge(args.x_max, "x-max")?;
    let points = cfg.merge_or(args.points, "points", 201)?;
    if points < 2 {
        return Err(CliError::Usage(format!(
            "grid needs at least 2 points, got {points}"
        )));
    }
    let full_axis = cfg.merge_switch(args.full_axis, "full-axis")?;
    let out: Option<PathBuf> = cfg.merge(args.out, "out")?;

    let fixed_span = match (x_min, x_max) {
        (Some(lo), Some(hi)) => {
            if !(lo < hi) {
                return Err(CliError::Usage(format!(
                    "need x-min < x-max, got {lo} and {hi}"
                )));
            }
            Some((lo, hi))
        }
        (None, None) => None,
        _ => {
            return Err(CliError::Usage(
                "give both --x-min and --x-max, or neither".into(),
            ))
        }
    };

    let mut rows: Vec<Vec<f64>> = Vec::new();
    for &t in &times {
        let mode = mode_at(&profile, t, rel_tol)?;
        let xs = match fixed_span {
            Some((lo, hi)) => linspace(lo, hi, points),
            None => auto_grid(&spec, &mode, points)?,
        };
        let grid = evaluate_grid(&spec, &mode, &xs, regime)?;
        if full_axis {
            for (x, rho) in grid.x.iter().zip(&grid.density).rev() {
                rows.push(vec![t, -x, 0.5 * rho]);
            }
            for (x, rho) in grid.x.iter().zip(&grid.density) {
                rows.push(vec![t, *x, 0.5 * rho]);
            }
        } else {
            for (x, rho) in grid.x.iter().zip(&grid.density) {
                rows.push(vec![t, *x, *rho]);
            }
        }
    }
    emit(out.as_deref(), &long_csv(&["t", "x", "density"], rows))
}

/// Kebab-case regime names used on the command line and in manifests.
const REGIME_NAMES: [(&str, Regime); 6] = [
    ("exact-jacobi", Regime::ExactJacobi),
    ("exact-hypergeom", Regime::ExactHypergeom),
    ("oscillator", Regime::Oscillator),
    ("large-d", Regime::LargeD),
    ("large-d-poisson", Regime::LargeDPoisson),
    ("adiabatic", Regime::Adiabatic),
];

fn parse_regime(name: &str) -> Result<Regime, CliError> {
    REGIME_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, r)| *r)
        .ok_or_else(|| {
            let all: Vec<&str> = REGIME_NAMES.iter().map(|(n, _)| *n).collect();
            CliError::Usage(format!(
                "unknown regime {name}; expected one of {}",
                all.join(", ")
            ))
        })
}

fn regime_name(regime: Regime) -> &'static str {
    REGIME_NAMES
        .iter()
        .find(|(_, r)| *r == regime)
        .map(|(n, _)| *n)
        .expect("every regime is named")
}

#[derive(Serialize)]
struct MatrixSidecar {
    d: f64,
    r: f64,
    rd: f64,
    rows: usize,
    cols: usize,
    regime: &'static str,
    library_version: &'static str,
    row_sums: Vec<f64>,
    tail_bounds: Vec<f64>,
    tail_onset_cols: Vec<Option<usize>>,
    max_tail_bound: f64,
}

fn run_transitions(args: TransitionsArgs, cfg: &Config) -> Result<(), CliError> {
    let d: f64 = cfg.require(args.d, "d")?;
    let r_flag = cfg.merge(args.r, "r")?;
    let rd_flag = cfg.merge(args.rd, "rd")?;
    let (r, rd) = match (r_flag, rd_flag) {
        (Some(r), None) => (r, r * d),
        (None, Some(rd)) => (rd / d, rd),
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("give --r or --rd, not both".into()));
        }
        (None, None) => {
            return Err(CliError::Usage("one of --r or --rd is required".into()));
        }
    };
    let rows = cfg.merge_or(args.rows, "rows", 10)?;
    let cols = cfg.merge_or(args.cols, "cols", 10)?;
    let regime = parse_regime(&cfg.merge_or(args.regime, "regime", "exact-jacobi".to_string())?)?;
    let out: Option<PathBuf> = cfg.merge(args.out, "out")?;
    let sidecar: Option<PathBuf> = cfg.merge(args.sidecar, "sidecar")?;

    let matrix = transition_matrix(d, r, rows, cols, regime)?;
    emit(out.as_deref(), &matrix_csv(&matrix))?;

    let sidecar_path = sidecar.or_else(|| out.as_ref().map(|p| p.with_extension("sidecar.json")));
    if let Some(path) = sidecar_path {
        let report = MatrixSidecar {
            d,
            r,
            rd,
            rows,
            cols,
            regime: regime_name(matrix.regime),
            library_version: singosc::version(),
            row_sums: matrix.row_sums.clone(),
            tail_bounds: matrix.tail_bounds.clone(),
            tail_onset_cols: matrix.tail_onset_cols.clone(),
            max_tail_bound: matrix.tail_bound(),
        };
        let mut text = serde_json::to_string_pretty(&report).expect("sidecar serializes");
        text.push('\n');
        emit(Some(&path), &text)?;
    }
    Ok(())
}

fn run_figure(args: FigureArgs, cfg: &Config) -> Result<(), CliError> {
    let out_dir = cfg.merge_or(args.out_dir, "out-dir", PathBuf::from("."))?;
    std::fs::create_dir_all(&out_dir)
        .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", out_dir.display())))?;
    let name = args.name.as_str();
    let (csv, manifest) = match name {
        "fig1" => surface_figure(name, 0)?,
        "fig2" => surface_figure(name, 2)?,
        "fig3" => sweep_figure(name)?,
        "fig4" => matrix_figure(name, figures::MATRIX_REFLECTIONS[0])?,
        "fig5" => matrix_figure(name, figures::MATRIX_REFLECTIONS[1])?,
        "fig6" => matrix_figure(name, figures::MATRIX_REFLECTIONS[2])?,
        other => {
            return Err(CliError::Usage(format!(
                "unknown figure {other}; use fig1..fig6"
            )))
        }
    };
    let csv_path = out_dir.join(format!("{name}.csv"));
    emit(Some(&csv_path), &csv)?;
    let manifest_path = out_dir.join(format!("{name}.manifest.json"));
    let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    text.push('\n');
    emit(Some(&manifest_path), &text)?;
    println!("wrote {} and {}", csv_path.display(), manifest_path.display());
    Ok(())
}

fn surface_figure(name: &str, n: u32) -> Result<(String, serde_json::Value), CliError> {
    let points = figures::density_surface(n, figures::SURFACE_D, figures::SURFACE_K)?;
    let csv = long_csv(
        &["t", "x", "density"],
        points.iter().map(|p| vec![p.t, p.x, p.density]),
    );
    let manifest = serde_json::json!({
        "figure": name,
        "library_version": singosc::version(),
        "dataset": "number-state density surface under parametric resonance",
        "state": format!("number:{n}"),
        "d": figures::SURFACE_D,
        "k": figures::SURFACE_K,
        "density_branch": "asymptotic",
        "mode": "closed-form parametric resonance",
        "time_range": [0.0, figures::SURFACE_T_MAX],
        "time_samples": figures::SURFACE_TIME_SAMPLES,
        "x_samples": figures::SURFACE_X_SAMPLES,
        "x_rule": format!(
            "x^2 sampled linearly over mean +/- {} std at each time",
            figures::SURFACE_SIGMA_SPAN
        ),
        "columns": ["t", "x", "density"],
        "files": [format!("{name}.csv")],
        "float_format": "scientific, 12 significant digits",
        "regenerate": format!("singosc figure {name}"),
    });
    Ok((csv, manifest))
}

fn sweep_figure(name: &str) -> Result<(String, serde_json::Value), CliError> {
    let sweep = figures::large_d_sweep()?;
    let mut header = vec!["rd".to_string()];
    for m in figures::SWEEP_COLUMNS {
        header.push(format!("w{}_{m}", figures::SWEEP_ROW));
    }
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let csv = long_csv(
        &header_refs,
        sweep.iter().map(|(rd, w)| {
            let mut row = vec![*rd];
            row.extend_from_slice(w);
            row
        }),
    );
    let manifest = serde_json::json!({
        "figure": name,
        "library_version": singosc::version(),
        "dataset": "large-d transition probabilities against r*d",
        "row_n": figures::SWEEP_ROW,
        "columns_m": figures::SWEEP_COLUMNS,
        "rd_range": [0.0, figures::SWEEP_RD_MAX],
        "rd_steps_per_unit": figures::SWEEP_STEPS_PER_UNIT,
        "regime": "large-d",
        "columns": header,
        "files": [format!("{name}.csv")],
        "float_format": "scientific, 12 significant digits",
        "regenerate": format!("singosc figure {name}"),
    });
    Ok((csv, manifest))
}

fn matrix_figure(name: &str, r: f64) -> Result<(String, serde_json::Value), CliError> {
    let matrix = figures::reflection_matrix(r)?;
    let csv = matrix_csv(&matrix);
    let regime = regime_name(matrix.regime);
    let manifest = serde_json::json!({
        "figure": name,
        "library_version": singosc::version(),
        "dataset": "transition-probability matrix",
        "d": matrix.d,
        "r": matrix.r,
        "rows": matrix.rows,
        "cols": matrix.cols,
        "regime": regime,
        "max_tail_bound": matrix.tail_bound(),
        "columns": "n, then W_n^m for m = 0..cols-1",
        "files": [format!("{name}.csv")],
        "float_format": "scientific, 12 significant digits",
        "regenerate": format!(
            "singosc transitions --d {} --r {} --rows {} --cols {} --regime {regime}",
            matrix.d, matrix.r, matrix.rows, matrix.cols
        ),
    });
    Ok((csv, manifest))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn state_specs_parse() {
        assert!(matches!(
            parse_state("number:5"),
            Ok(StateKind::NumberState(5))
        ));
        let Ok(StateKind::AlphaState(a)) = parse_state("alpha:1.5,-0.5") else {
            panic!("alpha spec should parse");
        };
        assert_eq!(a, Complex64::new(1.5, -0.5));
        let Ok(StateKind::ZState(z)) = parse_state("z:0.3,0.1") else {
            panic!("z spec should parse");
        };
        assert_eq!(z, Complex64::new(0.3, 0.1));
        for bad in ["number", "number:-1", "alpha:1", "spin:0.5,0"] {
            assert!(matches!(parse_state(bad), Err(CliError::Usage(_))), "{bad}");
        }
    }

    #[test]
    fn time_lists_parse() {
        assert_eq!(parse_times("0").unwrap(), vec![0.0]);
        assert_eq!(parse_times("0, 1.5,40").unwrap(), vec![0.0, 1.5, 40.0]);
        assert!(matches!(parse_times("1,,2"), Err(CliError::Usage(_))));
    }

    #[test]
    fn regime_names_round_trip() {
        for (name, regime) in REGIME_NAMES {
            assert_eq!(parse_regime(name).unwrap(), regime);
            assert_eq!(regime_name(regime), name);
        }
        assert!(matches!(parse_regime("exact"), Err(CliError::Usage(_))));
    }

    #[test]
    fn auto_grid_is_positive_and_sorted() {
        use singosc::mode::initial_mode;
        let mode = initial_mode(1.0, 0.0);
        for spec in [
            StateSpec::new(StateKind::NumberState(0), 2.0).unwrap(),
            StateSpec::new(StateKind::NumberState(3), 1e5).unwrap(),
            StateSpec::new(StateKind::AlphaState(Complex64::new(2.0, 0.0)), 10.0).unwrap(),
            StateSpec::new(StateKind::ZState(Complex64::new(0.5, 0.0)), 1e5).unwrap(),
        ] {
            let xs = auto_grid(&spec, &mode, 51).unwrap();
            assert_eq!(xs.len(), 51);
            assert!(xs[0] > 0.0);
            assert!(xs.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
