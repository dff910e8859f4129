use std::process::{Command, Output};

use centracover::group;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centracover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("centracover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn catalog_list_has_at_least_sixteen_groups() {
    let o = run(&["catalog", "list"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() >= 16);
}

#[test]
fn emitted_q8_round_trips_through_loader() {
    let o = run(&["catalog", "emit", "q8"]);
    assert!(o.status.success());
    let g = group::load_cayley_table(&stdout(&o)).unwrap();
    assert_eq!(g.order(), 8);
    let p = temp_file("q8.json", &stdout(&o));
    let a = run(&["analyze", p.to_str().unwrap()]);
    assert!(a.status.success());
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["classification"]["n_centralizers"], 3);
}

#[test]
fn unknown_catalog_name_exits_2() {
    assert_eq!(run(&["catalog", "emit", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "catalog:nosuch"]).status.code(), Some(2));
}

#[test]
fn missing_file_exits_2_with_message() {
    let o = run(&["analyze", "definitely-missing.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("definitely-missing.json"));
}

#[test]
fn broken_table_exits_2() {
    let p = temp_file(
        "broken.json",
        r#"{"name":"x","order":2,"labels":["a","b"],"table":[[0,1],[1,1]]}"#,
    );
    assert_eq!(run(&["verify", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn abelian_input_exits_3() {
    let p = temp_file(
        "c3.json",
        r#"{"name":"degree 3 cycle","degree":3,"generators":[[1,2,0]]}"#,
    );
    assert_eq!(
        run(&["analyze", p.to_str().unwrap()]).status.code(),
        Some(3)
    );
}

#[test]
fn permutation_documents_load() {
    let p = temp_file(
        "s3.json",
        r#"{"name":"s3 by hand","degree":3,"generators":[[1,0,2],[1,2,0]]}"#,
    );
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "centracover/1");
    assert_eq!(v["group"]["order"], 6);
    assert_eq!(v["group"]["name"], "s3 by hand");
}

#[test]
fn q8_report_is_f_and_ca() {
    let o = run(&["analyze", "catalog:q8"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let c = &v["classification"];
    assert_eq!(c["n_centralizers"], 3);
    assert_eq!(c["is_f_group"], true);
    assert_eq!(c["is_ca_group"], true);
}

#[test]
fn single_theorem_selection() {
    let o = run(&["verify", "catalog:s4", "--theorems", "thm-1.4"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let t = &v["reports"][0]["theorems"];
    assert_eq!(t.as_array().unwrap().len(), 1);
    assert_eq!(t[0]["status"], "pass");
    assert_eq!(
        run(&["verify", "catalog:s4", "--theorems", "nope"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn dot_outputs() {
    let h = stdout(&run(&["analyze", "catalog:s4", "--dot", "hasse"]));
    assert!(h.starts_with("digraph hasse"));
    let g = stdout(&run(&["analyze", "catalog:s4", "--dot", "graph"]));
    assert!(g.starts_with("graph gz"));
    assert_eq!(g.matches(" -- ").count(), 9);
}

#[test]
fn seed_flag_accepts_hex() {
    assert!(run(&["verify", "catalog:s3", "--seed", "0xBEEF"])
        .status
        .success());
    assert_eq!(
        run(&["verify", "catalog:s3", "--seed", "xyz"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn theorems_lists_every_registry_id() {
    let o = run(&["theorems"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for id in centracover::report::registry_ids() {
        assert!(text.lines().any(|l| l.starts_with(id)), "{id}");
    }
}
