use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greatcircle")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).expect("golden file present")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn golden_fibration_build() {
    let out = run(&["fibration", "build", "0", "-1", "1", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("fibration_build_0_-1_1_0.json"));
}

#[test]
fn golden_volume() {
    let out = run(&["volume", "2", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("volume_2_2.json"));
}

#[test]
fn golden_berger() {
    let out = run(&["berger", "0.1", "1.0", "10"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("berger_0.1_1.0_10.csv"));
}

#[test]
fn seeded_commands_are_byte_identical() {
    let cases: [&[&str]; 4] = [
        &["--seed", "7", "--samples", "300", "fibration", "check", "0", "-4", "1", "0"],
        &["--seed", "7", "grassmann", "1", "-3", "2", "-1"],
        &["--seed", "7", "--format", "csv", "grassmann", "1", "-3", "2", "-1"],
        &["--seed", "7", "curvature", "0", "-2", "3", "0", "--gamma", "-0.4", "--beta", "-0.9"],
    ];
    for args in cases {
        let first = run(args);
        let second = run(args);
        assert_eq!(code(&first), 0, "{args:?}: {}", String::from_utf8_lossy(&first.stderr));
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn seed_changes_sampled_output() {
    let a = run(&["--seed", "1", "--samples", "100", "fibration", "check", "--hopf"]);
    let b = run(&["--seed", "2", "--samples", "100", "fibration", "check", "--hopf"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["fibration", "build", "1", "0", "0", "1"])), 2);
    assert_eq!(code(&run(&["fibration", "build", "x", "0", "0", "1"])), 1);
    assert_eq!(code(&run(&["volume", "8", "3"])), 2);
    assert_eq!(code(&run(&["volume", "3", "2"])), 2);
    assert_eq!(code(&run(&["berger", "0.5", "1.5", "4"])), 2);
    assert_eq!(code(&run(&["curvature", "0", "-1", "1", "0", "--gamma", "0.5", "--beta", "-1"])), 2);
    assert_eq!(code(&run(&["grassmann", "1", "0", "0", "1"])), 2);
    assert_eq!(code(&run(&["--format", "csv", "fibration", "build", "0", "-1", "1", "0"])), 1);
    assert_eq!(code(&run(&["nonsense"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--samples", "500", "fibration", "check", "--hopf"])), 0);
}

#[test]
fn forced_real_eigenvalue_map_reports_witness() {
    let out = run(&["--samples", "300", "fibration", "check", "1", "0", "0", "1", "--force"]);
    assert_eq!(code(&out), 3);
    let v = json(&out);
    assert_eq!(v["report"]["clean"], false);
    assert!(v["report"]["witness"].is_array());
}

#[test]
fn tolerance_overrides() {
    assert_eq!(code(&run(&["--tol.bogus=1", "volume", "2", "2"])), 1);
    assert_eq!(code(&run(&["--tol.quadrature", "-1", "volume", "2", "2"])), 1);
    // A fit tolerance below the achievable residual makes the fit fail.
    let strict = run(&["--tol.fit=1e-30", "grassmann", "0", "-4", "1", "0"]);
    assert_eq!(code(&strict), 2);
    assert_eq!(code(&run(&["--tol", "lipschitz=1e-3", "grassmann", "0", "-4", "1", "0"])), 0);
}

#[test]
fn schema_version_and_field_names() {
    let v = json(&run(&["curvature", "1", "-3", "2", "-1", "--gamma", "-0.3", "--beta", "-0.7"]));
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["tensor"]["components"].as_array().unwrap().len(), 20);
    for key in ["report", "recoveredF", "roundTripError"] {
        assert!(!v[key].is_null(), "{key}");
    }
    let g = json(&run(&["grassmann", "--hopf"]));
    assert_eq!(g["decomposition"]["rank"], 0);
    for key in ["planeNormal", "L", "rank", "residual", "domainFactor"] {
        assert!(!g["decomposition"][key].is_null(), "{key}");
    }
}

#[test]
fn grassmann_csv_columns() {
    let out = run(&["--samples", "40", "--format", "csv", "grassmann", "0", "-4", "1", "0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda3,lambda4,xm1,xm2,xm3,xp1,xp2,xp3"));
    assert!(lines.all(|l| l.split(',').count() == 8));
}

#[test]
fn berger_inserts_boundary_row() {
    let text = String::from_utf8(run(&["berger", "0.5", "0.6", "2"]).stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[1].ends_with(",true"));
}

#[test]
fn out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("volume.json");
    let out = run(&["--out", path.to_str().unwrap(), "volume", "2", "2"]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("volume_2_2.json"));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}
