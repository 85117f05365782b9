//! The binary: exit codes, formats and the stored fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(p: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(p)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forcing-lab")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn validate_exit_codes() {
    let f24 = data("f24.pc");
    let cube = data("cube.pc");
    assert_eq!(code(&run(&["validate", "--input", f24.to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["validate", "--input", cube.to_str().unwrap()])), 1);
    let empty = std::env::temp_dir().join("forcing-lab-empty.pc");
    std::fs::write(&empty, b"").unwrap();
    let o = run(&["validate", "--input", empty.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("header"));
}

#[test]
fn forcing_table_rows() {
    let f24 = data("f24.pc");
    let o = run(&["forcing", "--input", f24.to_str().unwrap(), "--named", "F20", "--format", "json", "--expect-f", "2"]);
    // F20 has f = 3, so the assertion fails but both rows are reported
    assert_eq!(code(&o), 1);
    let v = json(&o);
    let rows = v["result"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["f"], 2);
    assert_eq!(rows[0]["f_witness"].as_array().unwrap().len(), 2);
    assert_eq!(rows[1]["f"], 3);
    let o = run(&["antiforcing", "--named", "F24", "--expect-af", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["result"][0]["af"], 4);
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_forcing-lab"))
        .args(["forcing", "--named", "F24"])
        .env("FORCING_LAB_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
    assert_eq!(code(&run(&["forcing", "--named", "F24", "--budget-vertices", "0"])), 2);
    assert_eq!(code(&run(&["forcing", "--named", "F24", "--no-such-flag"])), 2);
}

#[test]
fn catalog_family_counts() {
    let o = run(&["catalog", "--family", "P", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["result"]["count"], 2);
    // an overridden expectation turns into a failed check
    assert_eq!(code(&run(&["catalog", "--family", "J1", "--expect-j1", "2"])), 1);
    assert_eq!(code(&run(&["catalog", "--family", "X"])), 2);
}

#[test]
fn digraph_from_stored_catalogs() {
    let cats = data("catalogs");
    let c = cats.to_str().unwrap();
    let o = run(&["gen-digraph", "--catalogs", c, "--seeds", "123151323135", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["result"]["bundles_to_empty"]["[133233133233]"], 11);
    assert_eq!(v["result"]["bundles_to_empty"]["[1332331334]"], 10);
    assert_eq!(v["result"]["bundles_to_empty"]["[1333233333]"], 13);
    assert_eq!(code(&run(&["gen-digraph", "--catalogs", c, "--seeds", "111111"])), 2);
    // a seed that is in the catalog but has no walk to []
    assert_eq!(code(&run(&["gen-digraph", "--catalogs", c, "--seeds", "12223125"])), 2);
    let o = run(&["gen-digraph", "--catalogs", c, "--seeds", "123151323135", "--format", "dot"]);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("digraph D {"));
}

#[test]
fn build_walks() {
    let cats = data("catalogs");
    let c = cats.to_str().unwrap();
    let walk = "123151323135,1323142315,1323314315,1323331515,13332325,13333234,13333325,13333334,13333335,333334,153335,135335,3435,1555,56,[]";
    let o = run(&["build", "--catalogs", c, "--walk", walk, "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let b = &v["result"]["builds"][0];
    assert_eq!(b["order"], 30);
    assert_eq!(b["forcing_verified"], true);
    assert_eq!(b["f"], 3);
    let o = run(&["build", "--catalogs", c, "--walk", "123151323135,56,[]"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("walk failed"));
    let o = run(&["build", "--catalogs", c, "--sample", "5", "--seed", "3", "--format", "planar-code"]);
    assert_eq!(code(&o), 0);
    let gs = forcing_lab::plane::planar_code::from_planar_code(&o.stdout).unwrap();
    assert_eq!(gs.len(), 5);
    assert!(gs.iter().all(|g| forcing_lab::plane::validate_fullerene(g).is_ok()));
}
