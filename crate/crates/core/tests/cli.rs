//! The binary's documented invocations and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use wreath_hodge::fixtures;
use wreath_hodge::laurent::{SeriesEntry, SeriesQ};
use wreath_hodge::orbifold::wreath_series_product;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath-hodge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classes_of_z2_wr_s2() {
    let o = run(&["classes", "--group", &fixture("z2.json"), "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 5, "{text}");
    assert!(rows[0].ends_with("[c0:(2)]"));

    let o = run(&["classes", "--group", &fixture("s3.json"), "--n", "2", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["classes"].as_array().unwrap().len(), 9);
}

#[test]
fn hodge_both_paths_agree() {
    let o = run(&["hodge", &fixture("kummer.json"), "--qmax", "2", "--both"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("diff: none"));

    let o = run(&[
        "hodge",
        &fixture("cp2_z3.json"),
        "--qmax",
        "3",
        "--direct",
        "--group",
        &fixture("z3.json"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn hodge_json_round_trips() {
    let o = run(&[
        "hodge",
        &fixture("kummer.json"),
        "--qmax",
        "3",
        "--json",
        "--euler",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let entries: Vec<SeriesEntry> = serde_json::from_value(doc["series"].clone()).unwrap();
    assert_eq!(
        SeriesQ::from_json(&entries).unwrap(),
        wreath_series_product(&fixtures::kummer(), 3)
    );
    let euler: Vec<i64> = serde_json::from_value(doc["euler"].clone()).unwrap();
    assert_eq!(euler, vec![1, 24, 324, 3200]);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "hodge",
        &fixture("cp2_z3.json"),
        "--qmax",
        "3",
        "--both",
        "--json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_exit_codes() {
    let ok = run(&[
        "verify",
        "--orbifold",
        &fixture("kummer.json"),
        "--resolution",
        &fixture("k3.json"),
        "--qmax",
        "4",
    ]);
    assert_eq!(ok.status.code(), Some(0));

    let mismatch = run(&[
        "verify",
        "--orbifold",
        &fixture("kummer.json"),
        "--resolution",
        &fixture("cp2_z3_resolution.json"),
    ]);
    assert_eq!(mismatch.status.code(), Some(1));
    assert!(stdout(&mismatch).contains("hypothesis violated"));

    let cor1 = run(&[
        "verify",
        "--orbifold",
        &fixture("kummer.json"),
        "--resolution",
        &fixture("k3_trivial.json"),
        "--cor1",
    ]);
    assert_eq!(cor1.status.code(), Some(0));
}

#[test]
fn input_errors_exit_2() {
    let dir = std::env::temp_dir().join(format!("wreath-hodge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let broken = dir.join("broken.json");
    std::fs::write(
        &broken,
        "{\"name\": \"k3\",\n \"compact\": true,\n \"hodge\": [[0,0,1],[1,0,1]]}",
    )
    .unwrap();
    let o = run(&["hilbert", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("h^{s,t} = h^{t,s}"));

    std::fs::write(&broken, "{\"name\": \"k3\",\n \"compact\": tru }").unwrap();
    let o = run(&["hilbert", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["hodge", "/no/such/file.json"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn elliptic_with_q0_check() {
    let o = run(&[
        "elliptic",
        &fixture("k3_genus.json"),
        "--pmax",
        "2",
        "--qmax",
        "1",
        "--q0-check",
        &fixture("kummer.json"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("p^2 q^0: 3*y^{-2} + 42*y^{-1} + 234 + 42*y + 3*y^2"));

    let wrong = run(&[
        "elliptic",
        &fixture("k3_genus.json"),
        "--pmax",
        "2",
        "--qmax",
        "1",
        "--q0-check",
        &fixture("cp2_z3.json"),
    ]);
    assert_eq!(wrong.status.code(), Some(1));

    let short = run(&[
        "elliptic",
        &fixture("k3_genus.json"),
        "--pmax",
        "3",
        "--qmax",
        "1",
    ]);
    assert_eq!(short.status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("ok")).count(), 7);
}
