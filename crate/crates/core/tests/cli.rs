use std::path::PathBuf;
use std::process::{Command, Output};

fn k3vw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3vw"))
        .args(args)
        .env_remove("VW_PRECISION_BITS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("k3vw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let _ = std::fs::remove_file(&path);
    path
}

#[test]
fn coeffs_csv_rows() {
    let out = k3vw(&["coeffs", "--n-max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,a_n");
    assert_eq!(lines.len(), 1 + 22);
    assert_eq!(lines[1], "-1,1");
    assert_eq!(lines[2], "0,24");
    assert_eq!(lines[5], "3,25650");
}

#[test]
fn coeffs_json_parses() {
    let out = k3vw(&["coeffs", "--n-max", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> =
        stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect::<Vec<_>>();
    assert!(!rows.is_empty());
}

#[test]
fn invariant_su_r_value() {
    let out = k3vw(&["invariant", "--family", "su_r", "--r", "2", "--n-min", "2", "--n-max", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], "30");
    assert_eq!(v["family"], "su_r(r=2)");
}

#[test]
fn invariant_su_p_reports_field_element() {
    let out = k3vw(&["invariant", "--family", "su_p", "--p", "3", "--w-squared", "1", "--n-min", "0", "--n-max", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"]["p"], 3);
    assert!(v["value"]["coeffs"].is_array());
}

#[test]
fn usage_errors_exit_2_without_output() {
    let path = scratch("bad.csv");
    let out = k3vw(&["coeffs", "--n-max", "-5", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--n-max"));
    assert!(!path.exists());

    assert_eq!(k3vw(&["nonsense"]).status.code(), Some(2));
    assert_eq!(k3vw(&["invariant", "--family", "su_p", "--p", "4"]).status.code(), Some(2));
    assert_eq!(k3vw(&["exact", "--n-min", "5", "--n-max", "5", "--precision", "8"]).status.code(), Some(2));
}

#[test]
fn output_flag_writes_file() {
    let path = scratch("coeffs.csv");
    let out = k3vw(&["coeffs", "--n-max", "10", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&k3vw(&["coeffs", "--n-max", "10"])));
}

#[test]
fn precision_env_var() {
    let run = |bits: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_k3vw"))
            .args(["exact", "--n-min", "5", "--n-max", "5", "--format", "json"])
            .env("VW_PRECISION_BITS", bits)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        serde_json::from_str::<serde_json::Value>(stdout(&out).trim()).unwrap()
    };
    assert_eq!(run("100")["precision"], 100);
    assert_eq!(run("300")["precision"], 300);
    assert_eq!(run("300")["rounded"], "1073720");
}

#[test]
fn asymp_and_turan_run() {
    let out = k3vw(&["asymp", "--n-min", "10", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 4);

    let out = k3vw(&["turan", "--family", "su_r", "--r", "1", "--n-min", "1", "--n-max", "30", "--d", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["first_hyperbolic_n"], 1);
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["exact", "--n-min", "1", "--n-max", "8", "--threads", "2"];
    assert_eq!(k3vw(&args).stdout, k3vw(&args).stdout);
    let one = k3vw(&["turan", "--family", "twisted", "--p", "2", "--rho", "22", "--n-max", "40", "--threads", "1"]);
    let two = k3vw(&["turan", "--family", "twisted", "--p", "2", "--rho", "22", "--n-max", "40", "--threads", "2"]);
    assert_eq!(one.stdout, two.stdout);
}
