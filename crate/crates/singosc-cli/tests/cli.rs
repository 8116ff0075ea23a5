//! End-to-end checks of the singosc binary: exit codes, output formats,
//! config-file merging, and byte-level determinism of figure data.


use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singosc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_str(out)).expect("stdout is JSON")
}

/// CSV rows as float vectors, header skipped.
fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|line| {
            line.split(',')
                .map(|f| f.parse().expect("float field"))
                .collect()
        })
        .collect()
}

#[test]
fn params_reports_reference_trap() {
    let out = run(&[
        "params",
        "--mu-ratio",
        "1e5",
        "--voltage",
        "100",
        "--half-spacing",
        "1e-3",
    ]);
    assert!(out.status.success(), "{}", stderr_str(&out));
    let v = json(&out);
    let g_star = v["g_star"].as_f64().unwrap();
    let n_max = v["n_max"].as_f64().unwrap();
    assert!((3e9..3e10).contains(&g_star), "g* = {g_star}");
    assert!((80.0..120.0).contains(&n_max), "n_max = {n_max}");
    assert_eq!(v["charge"].as_f64().unwrap(), 1.0);
    assert_eq!(v["mu_ratio"].as_f64().unwrap(), 1e5);
    assert!(v["library_version"].is_string());
}

#[test]
fn params_missing_flag_is_usage() {
    let out = run(&["params", "--voltage", "100"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("mu-ratio"));
}

#[test]
fn transitions_identity_at_zero_reflection() {
    let out = run(&[
        "transitions", "--d", "1e5", "--r", "0", "--rows", "4", "--cols", "4",
    ]);
    assert!(out.status.success(), "{}", stderr_str(&out));
    let rows = csv_rows(&stdout_str(&out));
    assert_eq!(rows.len(), 4);
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row[0] as usize, n);
        for (m, w) in row[1..].iter().enumerate() {
            assert_eq!(*w, if m == n { 1.0 } else { 0.0 });
        }
    }
}

#[test]
fn transitions_rd_is_r_times_d() {
    let a = run(&[
        "transitions", "--d", "1e5", "--rd", "1.0", "--rows", "3", "--cols", "3",
    ]);
    let b = run(&[
        "transitions", "--d", "1e5", "--r", "1e-5", "--rows", "3", "--cols", "3",
    ]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn transitions_rejects_r_and_rd_together() {
    let out = run(&[
        "transitions", "--d", "10", "--r", "0.1", "--rd", "1.0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["transitions", "--d", "10"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn numerical_domain_errors_exit_two_with_one_line() {
    let cases: [&[&str]; 3] = [
        &["transitions", "--d", "10", "--r", "1.5"],
        &["density", "--state", "alpha:1,0", "--d", "300", "--points", "11"],
        &["transitions", "--d", "100", "--r", "0.1", "--regime", "large-d"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = stderr_str(&out);
        assert_eq!(err.trim_end().lines().count(), 1, "{err}");
        assert!(err.starts_with("error: "));
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["mode", "--profile", "bogus:x=1", "--t1", "1"][..],
        &["transitions", "--d", "10", "--r", "0.1", "--regime", "weird"][..],
        &["density", "--state", "spin:1", "--d", "10"][..],
        &["figure", "fig9"][..],
        &["density", "--state", "number:0", "--d", "10", "--x-min", "1"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn density_full_axis_mirrors_and_halves() {
    let base = &[
        "density", "--state", "number:1", "--d", "10", "--x-min", "0.5", "--x-max", "8",
        "--points", "9",
    ];
    let plain = run(base);
    let mut with_flag = base.to_vec();
    with_flag.push("--full-axis");
    let mirrored = run(&with_flag);
    assert!(plain.status.success() && mirrored.status.success());

    let plain = csv_rows(&stdout_str(&plain));
    let full = csv_rows(&stdout_str(&mirrored));
    assert_eq!(plain.len(), 9);
    assert_eq!(full.len(), 18);
    for (j, row) in plain.iter().enumerate() {
        let positive = &full[9 + j];
        let negative = &full[8 - j];
        assert_eq!(positive[1], row[1]);
        assert_eq!(negative[1], -row[1]);
        // both sides carry 12-digit roundings of rho/2, the reference row of rho
        let half = row[2] / 2.0;
        assert!((positive[2] - half).abs() <= 1e-11 * half);
        assert_eq!(negative[2], positive[2]);
    }
}

#[test]
fn mode_writes_trajectory_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("traj.csv");
    let out = run(&[
        "mode",
        "--profile",
        "resonance:k=0.02",
        "--t1",
        "40",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_str(&out));

    let summary = json(&out);
    assert!(summary["max_wronskian_drift"].as_f64().unwrap() <= 1e-8);
    assert_eq!(summary["omega_i"].as_f64().unwrap(), 1.0);
    assert_eq!(summary["t1"].as_f64().unwrap(), 40.0);
    assert!(summary["reflection_coefficient"].as_f64().unwrap() > 0.0);

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with(
        "t,eps_re,eps_im,eps_dot_re,eps_dot_im,abs_eps_sq,wronskian_drift\n"
    ));
    let rows = csv_rows(&csv);
    assert_eq!(rows[0][0], 0.0);
    assert_eq!(rows.last().unwrap()[0], 40.0);
    let final_eps2 = rows.last().unwrap()[5];
    assert!((final_eps2 - 1.4429895).abs() < 1e-4, "got {final_eps2}");
}

#[test]
fn sidecar_lands_next_to_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("matrix.csv");
    let out = run(&[
        "transitions", "--d", "1e5", "--r", "1e-6", "--rows", "6", "--cols", "40",
        "--out", csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_str(&out));

    let sidecar_path = dir.path().join("matrix.sidecar.json");
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&sidecar_path).unwrap()).unwrap();
    assert_eq!(sidecar["d"].as_f64().unwrap(), 1e5);
    assert_eq!(sidecar["rd"].as_f64().unwrap(), 0.1);
    assert_eq!(sidecar["regime"].as_str().unwrap(), "exact-jacobi");
    assert_eq!(sidecar["row_sums"].as_array().unwrap().len(), 6);
    assert_eq!(sidecar["tail_bounds"].as_array().unwrap().len(), 6);
    let max_tail = sidecar["max_tail_bound"].as_f64().unwrap();
    assert!(max_tail < 1e-8, "40 columns should leave a tiny tail: {max_tail}");
    for sum in sidecar["row_sums"].as_array().unwrap() {
        assert!((sum.as_f64().unwrap() - 1.0).abs() < 1e-8);
    }
}

#[test]
fn figure_output_is_deterministic() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    for dir in [&dir_a, &dir_b] {
        let out = run(&["figure", "fig3", "--out-dir", dir.path().to_str().unwrap()]);
        assert!(out.status.success(), "{}", stderr_str(&out));
    }
    for file in ["fig3.csv", "fig3.manifest.json"] {
        let a = std::fs::read(dir_a.path().join(file)).unwrap();
        let b = std::fs::read(dir_b.path().join(file)).unwrap();
        assert_eq!(a, b, "{file} differs between runs");
    }
}

#[test]
fn figure_manifest_regenerates_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["figure", "fig4", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr_str(&out));

    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("fig4.manifest.json")).unwrap())
            .unwrap();
    let command = manifest["regenerate"].as_str().unwrap();
    let args: Vec<&str> = command.split_whitespace().skip(1).collect();
    let regen = run(&args);
    assert!(regen.status.success(), "{}", stderr_str(&regen));

    let original = std::fs::read(dir.path().join("fig4.csv")).unwrap();
    assert_eq!(regen.stdout, original, "manifest command must reproduce the CSV");
}

#[test]
fn figure_surface_covers_the_grid() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["figure", "fig1", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr_str(&out));
    let csv = std::fs::read_to_string(dir.path().join("fig1.csv")).unwrap();
    let rows = csv_rows(&csv);
    assert_eq!(rows.len(), 81 * 201);
    assert_eq!(rows[0][0], 0.0);
    assert_eq!(rows.last().unwrap()[0], 40.0);
    assert!(rows.iter().all(|r| r[1] > 0.0 && r[2].is_finite()));
}

#[test]
fn config_file_fills_flags_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("trap.cfg");
    std::fs::write(&cfg, "mu-ratio=1e5\nvoltage=50\nhalf-spacing=1e-3\n").unwrap();

    let from_cfg = run(&["params", "--config", cfg.to_str().unwrap()]);
    assert!(from_cfg.status.success(), "{}", stderr_str(&from_cfg));
    assert_eq!(json(&from_cfg)["voltage_v"].as_f64().unwrap(), 50.0);

    let overridden = run(&[
        "params",
        "--config",
        cfg.to_str().unwrap(),
        "--voltage",
        "100",
    ]);
    let v = json(&overridden);
    assert_eq!(v["voltage_v"].as_f64().unwrap(), 100.0);
    assert_eq!(v["mu_ratio"].as_f64().unwrap(), 1e5);

    let pure_flags = run(&[
        "params",
        "--mu-ratio",
        "1e5",
        "--voltage",
        "100",
        "--half-spacing",
        "1e-3",
    ]);
    assert_eq!(overridden.stdout, pure_flags.stdout);
}

#[test]
fn density_profile_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("omega.txt");
    std::fs::write(&table, "# t omega\n0 1\n5 1\n").unwrap();
    let spec = format!("file:{}", table.to_str().unwrap());
    let out = run(&[
        "density", "--state", "number:0", "--d", "10", "--profile", &spec,
        "--times", "5", "--points", "7",
    ]);
    assert!(out.status.success(), "{}", stderr_str(&out));
    let constant = run(&[
        "density", "--state", "number:0", "--d", "10", "--times", "5", "--points", "7",
    ]);
    // a flat table and constant:omega=1 describe the same motion
    let a = csv_rows(&stdout_str(&out));
    let b = csv_rows(&stdout_str(&constant));
    for (ra, rb) in a.iter().zip(&b) {
        assert!((ra[2] - rb[2]).abs() <= 1e-6 * rb[2].abs() + 1e-12);
    }
}
