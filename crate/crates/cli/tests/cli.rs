use std::f64::consts::{FRAC_PI_2, PI};
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const SMALL_GRIDS: [&str; 4] = ["--a-grid", "128", "--s-grid", "256"];

fn run(out: &Path, args: &[&str]) -> Output {
    run_env(out, args, None)
}

fn run_env(out: &Path, args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_traceconst"));
    cmd.args(args).arg("--out").arg(out);
    cmd.env_remove("TRACECONST_THREADS");
    if let Some(t) = threads {
        cmd.env("TRACECONST_THREADS", t);
    }
    cmd.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

/// Parses a CSV without quoted fields into header and rows.
fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<String>>) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    (header, rows)
}

fn column(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"))
}

#[test]
fn disk_constants() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &[&["constants", "--shape", "disk"][..], &SMALL_GRIDS].concat());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.contains("limit a->0"));
    let (h, rows) = read_csv(&dir.path().join("constants.csv"));
    assert_eq!(rows.len(), 1);
    let med: f64 = rows[0][column(&h, "c_med")].parse().unwrap();
    let mv: f64 = rows[0][column(&h, "c_mv")].parse().unwrap();
    assert!((med - FRAC_PI_2).abs() < 1e-6);
    assert!((mv - 2.0).abs() < 1e-8);
}

#[test]
fn stadium_constants_match_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &[&["constants", "--shape", "stadium:1:2"][..], &SMALL_GRIDS].concat());
    assert_eq!(code(&o), 0);
    let (h, rows) = read_csv(&dir.path().join("constants.csv"));
    let mv: f64 = rows[0][column(&h, "c_mv")].parse().unwrap();
    assert!((mv - (2.0 + PI) / 2.0).abs() < 1e-6);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let lshape = dir.path().join("lshape.txt");
    fs::write(&lshape, "# L-shape\n0 0\n1 0\n1 0.5\n0.5 0.5\n0.5 1\n0 1\n").unwrap();
    let malformed = dir.path().join("bad.txt");
    fs::write(&malformed, "0 0\n1 zero\n").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["constants", "--input", lshape.to_str().unwrap()],
        vec!["constants", "--input", malformed.to_str().unwrap()],
        vec!["constants", "--input", "/nonexistent/poly.txt"],
        vec!["constants", "--shape", "ellipse"],
        vec!["constants"],
        vec!["constants", "--shape", "disk", "--s-grid", "8"],
        vec!["ball-constant", "--dim", "1"],
        vec!["cauchy-check", "--input", malformed.to_str().unwrap()],
    ];
    for args in cases {
        let o = run(dir.path(), &args);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let o = run_env(dir.path(), &["ball-constant"], Some("zero"));
    assert_eq!(code(&o), 2);
}

#[test]
fn failed_relations_exit_1() {
    // 16 directions are far too few for the 1e-5 perimeter tolerance
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["cauchy-check", "--quad", "16"]);
    assert_eq!(code(&o), 1, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(dir.path().join("cauchy_check.csv").exists());
}

#[test]
fn ball_constant_table() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["ball-constant", "--dim", "10"]);
    assert_eq!(code(&o), 0);
    let (h, rows) = read_csv(&dir.path().join("ball_constant.csv"));
    assert_eq!(rows.len(), 9);
    let g = column(&h, "gamma_form");
    assert!((rows[0][g].parse::<f64>().unwrap() - FRAC_PI_2).abs() < 1e-12);
    assert!((rows[1][g].parse::<f64>().unwrap() - 2.0).abs() < 1e-12);
    let rel: f64 = rows[8][column(&h, "rel_diff")].parse().unwrap();
    assert!(rel < 1e-12);
}

#[test]
fn cauchy_check_builtins_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["cauchy-check"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let (h, rows) = read_csv(&dir.path().join("cauchy_check.csv"));
    let convex: Vec<&str> = rows.iter().map(|r| r[column(&h, "convex")].as_str()).collect();
    assert_eq!(convex, ["true", "true", "false", "false"]);
    let svg = fs::read_to_string(dir.path().join("cauchy_gap.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<rect"));

    let tri = dir.path().join("tri.json");
    fs::write(&tri, "[[0, 0], [2, 0], [0.5, 1.5]]").unwrap();
    let o = run(dir.path(), &["cauchy-check", "--input", tri.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("cauchy_check.json")).unwrap()).unwrap();
    assert_eq!(v[0]["convex"], true);
}

#[test]
fn stadium_sweep_finds_the_kink() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &[&["stadium-sweep"][..], &["--a-grid", "64", "--s-grid", "128"]].concat());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let (h, rows) = read_csv(&dir.path().join("stadium_sweep.csv"));
    assert_eq!(rows.len(), 129);
    let (d, c, opt) = (column(&h, "d_over_r"), column(&h, "closed_form"), column(&h, "optimizer"));
    for (ratio, want) in [(0.5, 2.0), (1.5, (1.5 + PI) / 2.0)] {
        let row = rows.iter().find(|r| r[d].parse::<f64>().unwrap() == ratio).unwrap();
        assert!((row[c].parse::<f64>().unwrap() - want).abs() < 1e-12);
        assert!((row[opt].parse::<f64>().unwrap() - want).abs() < 1e-6);
    }
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.contains("kink at d/R = 0.859375"), "{stdout}");
    assert!(fs::read_to_string(dir.path().join("stadium_sweep.svg")).unwrap().contains("<polyline"));
}

#[test]
fn random_bodies_are_deterministic_across_threads() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = [&["random-bodies", "--count", "8", "--seed", "7"][..], &SMALL_GRIDS].concat();
    let oa = run_env(a.path(), &args, Some("1"));
    let ob = run_env(b.path(), &args, Some("4"));
    assert_eq!(code(&oa), 0, "{}", String::from_utf8_lossy(&oa.stderr));
    assert_eq!(code(&ob), 0);
    let ca = fs::read(a.path().join("random_bodies.csv")).unwrap();
    assert_eq!(ca, fs::read(b.path().join("random_bodies.csv")).unwrap());
    let text = String::from_utf8(ca).unwrap();
    // 8 random bodies, 4 stadiums, one header; the first body is oracle-checked
    assert_eq!(text.lines().count(), 13);
    assert!(!text.lines().nth(1).unwrap().ends_with(",,"));
    assert!(fs::read_to_string(a.path().join("random_bodies.svg")).unwrap().contains("<circle"));
}
